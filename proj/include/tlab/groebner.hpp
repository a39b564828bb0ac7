#pragma once

#include <span>
#include <vector>

#include "tlab/module_element.hpp"

namespace tlab {

enum class OrderTag { DegRevLexTermOverPosition };

/// Gröbner basis of a homogeneous submodule of a twisted free module
/// (rank 1 and twist 0 for ideals).
struct GroebnerBasis {
  std::vector<ModuleElement> generators;
  std::vector<int> twists;
  OrderTag order = OrderTag::DegRevLexTermOverPosition;
  bool reduced = false;

  std::size_t rank() const { return twists.size(); }
};

/// Remainder of f modulo the basis: repeatedly cancels the largest reducible
/// term using the first generator (in list order) whose leading term divides it.
ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& basis, const PrimeField& field);

/// Reduced Gröbner basis of the submodule generated by homogeneous generators.
/// Output is sorted by ascending degree, then descending leading term.
GroebnerBasis buchberger(std::span<const ModuleElement> generators, std::span<const int> twists,
                         const PrimeField& field);

/// Schreyer syzygies of a Gröbner basis over the polynomial ring: generators of
/// the kernel of the map sending unit vector i to basis generator i. The
/// syzygy module's twists are the degrees of the basis generators.
std::vector<ModuleElement> syzygy_basis(const GroebnerBasis& basis, const PrimeField& field);

/// Normal form modulo the submodule generated by `basis` together with
/// I * e_i for every unit vector, where `defining` is a Gröbner basis of I.
/// Zero exactly when f lies in that submodule.
ModuleElement quotient_normal_form(const ModuleElement& f, const GroebnerBasis& basis,
                                   const GroebnerBasis& defining, const PrimeField& field);

/// Result of a degree-by-degree Buchberger run that also reports which of the
/// counted inputs are minimal generators modulo the background inputs.
struct GroebnerRun {
  std::vector<TermVector> basis;           // monic, sorted under the run order
  std::vector<std::size_t> minimal;        // indices into the counted inputs
};

/// Homogeneous Buchberger run under `order`. Within each degree the S-pairs
/// are processed first (lexicographic pair order), then background inputs,
/// then counted inputs; a counted input is minimal iff it does not reduce to
/// zero at that point. `ideal_multiples` marks background inputs of the form
/// h * e_i with h from a Gröbner basis of the defining ideal, whose mutual
/// S-pairs are known to reduce to zero.
GroebnerRun run_groebner(std::span<const int> twists, const TermOrder& order,
                         std::span<const ModuleElement> background,
                         std::span<const ModuleElement> counted, const PrimeField& field,
                         std::size_t ideal_multiples = 0);

}  // namespace tlab
