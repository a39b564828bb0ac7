#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlab/polynomial.hpp"

namespace tlab {

struct ModuleTerm {
  Monomial monomial;
  std::uint32_t component = 0;
  Coeff coeff = 0;
};

/// Term-over-position module order: degrevlex on monomials, ties broken by
/// position with lower index ranking higher. An optional split places all
/// components below `split` above every component at or after it, which
/// gives the elimination order used for kernels.
struct TermOrder {
  static constexpr std::uint32_t kNoSplit = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t split = kNoSplit;

  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    if (split != kNoSplit) {
      bool ua = a.component < split;
      bool ub = b.component < split;
      if (ua != ub) return ua ? 1 : -1;
    }
    int c = degrevlex_compare(a.monomial, b.monomial);
    if (c != 0) return c;
    if (a.component != b.component) return a.component < b.component ? 1 : -1;
    return 0;
  }
  bool operator==(const TermOrder&) const = default;
};

using TermVector = std::vector<ModuleTerm>;

/// Sorts under `order`, merges equal terms and drops zeros.
void normalize_terms(TermVector& terms, const TermOrder& order, const PrimeField& field);

/// Returns a - c * m * b, where both inputs are sorted under `order`.
/// Terms of `a` before `a_from` are ignored; the first `b_skip` terms of b are ignored.
TermVector sub_scaled(const TermVector& a, std::size_t a_from, Coeff c, const Monomial& m,
                      const TermVector& b, std::size_t b_skip, const TermOrder& order,
                      const PrimeField& field);

/// Element of a free module of fixed rank, stored as sparse terms sorted
/// under the default TermOrder.
class ModuleElement {
 public:
  explicit ModuleElement(std::size_t rank = 0) : rank_(rank) {}
  /// Takes ownership of terms already sorted under the default order.
  ModuleElement(std::size_t rank, TermVector sorted_terms)
      : rank_(rank), terms_(std::move(sorted_terms)) {}

  static ModuleElement from_components(std::span<const Polynomial> components);
  static ModuleElement unit(std::size_t rank, std::size_t index);
  /// Polynomial p placed in component `index`.
  static ModuleElement single(std::size_t rank, std::size_t index, const Polynomial& p);

  std::size_t rank() const { return rank_; }
  const TermVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& lead() const { return terms_.front(); }

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  /// Internal degree under the given generator twists; nullopt for zero.
  std::optional<int> degree(std::span<const int> twists) const;
  bool is_homogeneous(std::span<const int> twists) const;
  /// True when some term is a nonzero constant.
  bool has_unit_entry(std::size_t* component = nullptr) const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  std::size_t rank_ = 0;
  TermVector terms_;
};

ModuleElement add(const ModuleElement& a, const ModuleElement& b, const PrimeField& field);
ModuleElement sub(const ModuleElement& a, const ModuleElement& b, const PrimeField& field);
ModuleElement scale(const ModuleElement& a, Coeff c, const PrimeField& field);
ModuleElement mul_term(const ModuleElement& a, const Monomial& m, Coeff c, const PrimeField& field);
ModuleElement mul(const Polynomial& p, const ModuleElement& a, const PrimeField& field);

/// Embeds into a larger free module, shifting component indices by `offset`.
ModuleElement embed(const ModuleElement& a, std::size_t new_rank, std::size_t offset);
/// Keeps components in [begin, end), renumbered from zero.
ModuleElement restrict_components(const ModuleElement& a, std::size_t begin, std::size_t end);

}  // namespace tlab
