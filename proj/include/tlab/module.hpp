#pragma once

#include <vector>

#include "tlab/ring.hpp"

namespace tlab {

/// Free module with generator i in degree twists[i].
struct TwistedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  bool operator==(const TwistedFreeModule&) const = default;
};

/// Degree-zero map between twisted free modules. Column j is the image of
/// source generator j, an element of the target free module.
struct HomogeneousMap {
  TwistedFreeModule source;
  TwistedFreeModule target;
  std::vector<ModuleElement> columns;

  Polynomial entry(std::size_t i, std::size_t j) const { return columns[j].component(i); }
  bool is_zero() const;
  /// True when every entry lies in the irrelevant maximal ideal.
  bool is_minimal() const;
};

/// Throws StructuralError when shapes or entry degrees are inconsistent.
void check_homogeneous(const HomogeneousMap& f);

/// g after f.
HomogeneousMap compose(const HomogeneousMap& g, const HomogeneousMap& f, const Ring& ring);

/// The R-dual F^* -> G^* of f: F -> G (twists negated, matrix transposed).
HomogeneousMap dual_map(const HomogeneousMap& f);

/// Graded module coker(presentation) over a ring.
struct PresentedModule {
  Ring ring;
  HomogeneousMap presentation;
  bool minimal = false;

  const std::vector<int>& generator_degrees() const { return presentation.target.twists; }
  std::size_t num_generators() const { return presentation.target.rank(); }
  std::size_t num_relations() const { return presentation.columns.size(); }
  const std::vector<ModuleElement>& relations() const { return presentation.columns; }

  static PresentedModule free(const Ring& ring, std::vector<int> twists);
  static PresentedModule zero(const Ring& ring);
  /// coker of the map given by relation columns in the free module with these twists.
  static PresentedModule cokernel(const Ring& ring, std::vector<int> twists,
                                  std::vector<ModuleElement> relations);
  /// R / (f_1, ..., f_s) for homogeneous ring elements.
  static PresentedModule cyclic(const Ring& ring, const std::vector<Polynomial>& ideal);
  static PresentedModule residue_field(const Ring& ring);
  static PresentedModule maximal_ideal(const Ring& ring);
};

/// Degree-zero homomorphism between presented modules, given by the images of
/// the source generators as elements of the target's free cover.
struct ModuleMap {
  PresentedModule source;
  PresentedModule target;
  std::vector<ModuleElement> images;
};

// Submodule machinery over R = S/I. All element lists live in a free module
// with the given twists; I * F is always taken into account.

/// Indices of a minimal generating subset of `candidates` modulo the
/// submodule generated by `background` and I * F. Candidates are scanned in
/// degree order, earlier entries first.
std::vector<std::size_t> minimal_generators(const Ring& ring, const std::vector<int>& twists,
                                            const std::vector<ModuleElement>& background,
                                            const std::vector<ModuleElement>& candidates);

/// True when every candidate lies in the submodule generated by `background` and I * F.
bool contained_in(const Ring& ring, const std::vector<int>& twists,
                  const std::vector<ModuleElement>& background,
                  const std::vector<ModuleElement>& candidates);

/// Minimal homogeneous generators (modulo I * F) of
/// { v in F : f(v) lies in span(extra) + I * G }.
std::vector<ModuleElement> preimage_kernel(const Ring& ring, const HomogeneousMap& f,
                                           const std::vector<ModuleElement>& extra = {});

/// Minimal presentation of (span(gens) + span(rels)) / span(rels) inside the
/// free module with the given twists.
PresentedModule subquotient(const Ring& ring, const std::vector<int>& twists,
                            const std::vector<ModuleElement>& gens,
                            const std::vector<ModuleElement>& rels);

PresentedModule minimalize(const PresentedModule& m);

/// Throws InputError when the map is not homogeneous of degree zero or does
/// not send relations into relations.
void check_well_defined(const ModuleMap& f);

/// Minimal presentation of the kernel of f, as a submodule of f.source.
PresentedModule kernel_of_map(const ModuleMap& f);
/// Same test as is_zero(kernel_of_map(f)) without presenting the kernel.
bool is_injective(const ModuleMap& f);

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
PresentedModule direct_sum(const std::vector<PresentedModule>& parts);

/// M(d): generator degrees lowered by d.
PresentedModule shift(const PresentedModule& m, int d);

struct FreeSplitting {
  TwistedFreeModule free_part;
  PresentedModule residual;
};

/// Splits off free direct summands one at a time until none remain.
FreeSplitting split_free_summands(const PresentedModule& m);

bool is_zero(const PresentedModule& m);
bool is_free(const PresentedModule& m);

/// Generators of Hom(M, R) as elements of the dual of M's free cover (a
/// homomorphism u sends generator j to u_j).
std::vector<ModuleElement> dual_generators(const PresentedModule& m);

}  // namespace tlab
