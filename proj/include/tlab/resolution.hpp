#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tlab/module.hpp"

namespace tlab {

/// Minimal graded free resolution F_L -> ... -> F_1 -> F_0 -> M -> 0.
/// maps[i] is d_{i+1}: F_{i+1} -> F_i.
struct Resolution {
  Ring ring;
  PresentedModule target;  // minimal presentation of the resolved module
  std::vector<TwistedFreeModule> modules;
  std::vector<HomogeneousMap> maps;
  /// True once some kernel came out zero, so the resolution is complete.
  bool finite = false;

  std::size_t length() const { return maps.size(); }
  const HomogeneousMap& d(std::size_t i) const { return maps.at(i - 1); }
};

/// Resolves to homological degree `length` (or until the resolution stops).
Resolution resolve(const PresentedModule& m, std::size_t length);

/// Extends an existing resolution in place up to `length`.
void extend(Resolution& res, std::size_t length);

/// Ω^n M = F_n / im d_{n+1}, minimally presented by d_{n+1}. Ω^0 M is the
/// minimalized module itself.
PresentedModule syzygy(const PresentedModule& m, std::size_t n);
PresentedModule syzygy_from(const Resolution& res, std::size_t n);

/// Finite minimal resolution of M as a module over the ambient polynomial ring.
Resolution resolve_over_ambient(const PresentedModule& m);

/// b_{i,j}: number of generators of degree j in F_i.
struct BettiTable {
  std::vector<std::size_t> totals;
  std::map<std::pair<std::size_t, int>, std::size_t> graded;

  std::size_t at(std::size_t i, int j) const {
    auto it = graded.find({i, j});
    return it == graded.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable&) const = default;
};

BettiTable betti_table(const Resolution& res);

/// Throws StructuralError unless d_i d_{i+1} = 0 and all maps are minimal.
void check_complex(const Resolution& res);

}  // namespace tlab
