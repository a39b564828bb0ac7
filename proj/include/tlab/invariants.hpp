#pragma once

#include <cstdint>
#include <vector>

#include "tlab/homology.hpp"

namespace tlab {

/// Hilbert series numerator(T) / (1 - T)^n with a Laurent numerator:
/// numerator[k] is the coefficient of T^(k + offset).
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int offset = 0;
  std::size_t num_variables = 0;
  /// numerator / (1 - T)^(n - dim); the series is reduced / (1 - T)^dim.
  std::vector<std::int64_t> reduced;
  /// Pole order at T = 1; -1 for the zero module.
  int dimension = -1;

  bool is_zero() const { return numerator.empty(); }
  /// Reduced numerator at T = 1. Throws InputError for the zero module.
  std::int64_t multiplicity() const;
  /// Coefficient of T^d in the series.
  std::int64_t coefficient(int d) const;
};

HilbertSeries hilbert_series(const PresentedModule& m);
std::int64_t hilbert_function(const PresentedModule& m, int degree);

int dimension(const PresentedModule& m);
std::int64_t multiplicity(const PresentedModule& m);
std::size_t mu(const PresentedModule& m);
std::size_t edim(const Ring& ring);

struct RingProfile {
  int dimension = 0;
  int depth = 0;
  std::size_t type = 0;
  std::size_t edim = 0;
  std::int64_t multiplicity = 0;
  bool is_cohen_macaulay = false;
  bool is_gorenstein = false;
  bool has_minimal_multiplicity = false;
};

/// dim_k Ext^t(k, R) with t = depth R.
std::size_t ring_type(const Ring& ring);
RingProfile ring_profile(const Ring& ring);

/// Maximal Cohen-Macaulay with e(M) = mu(M). Throws InputError for M = 0.
bool is_ulrich(const PresentedModule& m);

}  // namespace tlab
