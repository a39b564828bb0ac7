#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "tlab/resolution.hpp"

namespace tlab {

/// Stand-in for an infinite grade or depth (zero module).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Hom(M, R), minimally presented as a submodule of the dual of M's free cover.
PresentedModule dual(const PresentedModule& m);

/// Auslander transpose coker(d^*) of the minimal presentation d of M.
PresentedModule transpose(const PresentedModule& m);

/// Ext^i(M, N) for i = 0..max_i from a minimal resolution of M.
struct ExtProfile {
  std::vector<PresentedModule> modules;

  std::size_t max_index() const { return modules.size() - 1; }
  bool is_zero(std::size_t i) const { return modules.at(i).num_generators() == 0; }
  /// dim_k Ext^i(M, N)_d for d in [lo, hi].
  std::vector<long> graded_dimensions(std::size_t i, int lo, int hi) const;
};

ExtProfile ext(const PresentedModule& m, const PresentedModule& n, std::size_t max_i);

/// Computes Ext^i(M, N) one index at a time, extending the resolution of M as
/// needed. Vanishing checks skip the relation computation.
class ExtComputer {
 public:
  ExtComputer(const PresentedModule& m, const PresentedModule& n);
  ExtComputer(Resolution res, const PresentedModule& n);

  PresentedModule module(std::size_t i);
  bool vanishes(std::size_t i);
  const Resolution& resolution() const { return res_; }

 private:
  struct Cocycles {
    std::vector<int> twists;
    std::vector<ModuleElement> cycles;
    std::vector<ModuleElement> boundaries;
  };
  Cocycles cocycles(std::size_t i);
  std::vector<int> hom_twists(std::size_t i) const;
  std::vector<ModuleElement> hom_map(std::size_t i) const;

  Resolution res_;
  PresentedModule n_;
};

/// Least i with Ext^i(N, R) nonzero; kInfinity for N = 0.
int grade(const PresentedModule& n);

/// Least i with Ext^i(k, M) nonzero; kInfinity for M = 0.
int depth(const PresentedModule& m);

struct TorsionfreeVerdict {
  std::size_t index = 0;
  bool cap_reached = false;
  std::size_t cap = 0;
  std::optional<std::size_t> witness;  // first j with Ext^j(Tr M, R) != 0
};

TorsionfreeVerdict tf_index(const PresentedModule& m, std::size_t cap);

struct SyzygyOrderVerdict {
  std::size_t order = 0;
  bool cap_reached = false;
  std::size_t cap = 0;
  /// Successive cokernels M_1, M_2, ... of the universal pushforwards.
  std::vector<PresentedModule> chain;
};

SyzygyOrderVerdict syzygy_order(const PresentedModule& m, std::size_t cap);

/// Ext^i(M,R) = 0 for 1 <= i <= a and Ext^j(Tr M, R) = 0 for 1 <= j <= b.
bool gab_membership(const PresentedModule& m, std::size_t a, std::size_t b);

struct ReflexivityWitness {
  bool holds = true;
  std::optional<std::size_t> ext_index;        // first nonvanishing Ext^i(M, R)
  std::optional<std::size_t> transpose_index;  // first nonvanishing Ext^j(Tr M, R)
};

/// Finite-window proxy for total reflexivity: gab_membership(M, n, n).
bool totally_reflexive_up_to(const PresentedModule& m, std::size_t n);
ReflexivityWitness reflexivity_witness(const PresentedModule& m, std::size_t a, std::size_t b);

}  // namespace tlab
