#include "tlab/invariants.hpp"

#include <algorithm>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void trim(std::vector<std::int64_t>& q, int& offset) {
  while (!q.empty() && q.back() == 0) q.pop_back();
  std::size_t lead = 0;
  while (lead < q.size() && q[lead] == 0) ++lead;
  q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(lead));
  offset += static_cast<int>(lead);
  if (q.empty()) offset = 0;
}

}  // namespace

std::int64_t HilbertSeries::multiplicity() const {
  if (is_zero()) throw InputError("multiplicity of the zero module is undefined");
  std::int64_t e = 0;
  for (auto c : reduced) e += c;
  return e;
}

std::int64_t HilbertSeries::coefficient(int d) const {
  std::int64_t n = static_cast<std::int64_t>(num_variables);
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    std::int64_t shift = d - (static_cast<std::int64_t>(k) + offset);
    if (shift < 0) continue;
    sum += numerator[k] * binomial(shift + n - 1, n - 1);
  }
  return sum;
}

HilbertSeries hilbert_series(const PresentedModule& m) {
  HilbertSeries hs;
  hs.num_variables = m.ring->num_variables();
  Resolution res = resolve_over_ambient(m);
  int lo = 0;
  int hi = 0;
  bool any = false;
  for (const auto& f : res.modules) {
    for (int t : f.twists) {
      lo = any ? std::min(lo, t) : t;
      hi = any ? std::max(hi, t) : t;
      any = true;
    }
  }
  if (!any) return hs;
  std::vector<std::int64_t> q(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int t : res.modules[i].twists) q[static_cast<std::size_t>(t - lo)] += (i % 2 == 0) ? 1 : -1;
  }
  int offset = lo;
  trim(q, offset);
  hs.numerator = q;
  hs.offset = offset;
  if (q.empty()) return hs;

  // Divide by (1 - T) while the numerator vanishes at T = 1.
  std::vector<std::int64_t> r = q;
  std::size_t divisions = 0;
  while (divisions < hs.num_variables) {
    std::int64_t at_one = 0;
    for (auto c : r) at_one += c;
    if (at_one != 0) break;
    std::vector<std::int64_t> p(r.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      acc += r[k];
      p[k] = acc;
    }
    r = std::move(p);
    ++divisions;
  }
  hs.reduced = r;
  hs.dimension = static_cast<int>(hs.num_variables - divisions);
  return hs;
}

std::int64_t hilbert_function(const PresentedModule& m, int degree) {
  return hilbert_series(m).coefficient(degree);
}

int dimension(const PresentedModule& m) { return hilbert_series(m).dimension; }

std::int64_t multiplicity(const PresentedModule& m) { return hilbert_series(m).multiplicity(); }

std::size_t mu(const PresentedModule& m) { return minimalize(m).num_generators(); }

std::size_t edim(const Ring& ring) { return ring->num_variables(); }

namespace {

struct DepthAndType {
  int depth;
  std::size_t type;
};

DepthAndType depth_and_type(const Ring& ring) {
  ExtComputer computer(PresentedModule::residue_field(ring), PresentedModule::free(ring, {0}));
  for (std::size_t i = 0; i <= ring->num_variables(); ++i) {
    if (!computer.vanishes(i)) return {static_cast<int>(i), computer.module(i).num_generators()};
  }
  throw std::logic_error("depth of the ring exceeds the number of variables");
}

}  // namespace

std::size_t ring_type(const Ring& ring) { return depth_and_type(ring).type; }

RingProfile ring_profile(const Ring& ring) {
  RingProfile p;
  HilbertSeries hs = hilbert_series(PresentedModule::free(ring, {0}));
  DepthAndType dt = depth_and_type(ring);
  p.dimension = hs.dimension;
  p.multiplicity = hs.multiplicity();
  p.depth = dt.depth;
  p.type = dt.type;
  p.edim = edim(ring);
  p.is_cohen_macaulay = p.depth == p.dimension;
  p.is_gorenstein = p.is_cohen_macaulay && p.type == 1;
  p.has_minimal_multiplicity =
      p.multiplicity == static_cast<std::int64_t>(p.edim) - p.dimension + 1;
  return p;
}

bool is_ulrich(const PresentedModule& m) {
  PresentedModule min = minimalize(m);
  if (min.num_generators() == 0) throw InputError("the zero module is not Ulrich-testable");
  HilbertSeries ring_hs = hilbert_series(PresentedModule::free(m.ring, {0}));
  if (depth(min) != ring_hs.dimension) return false;
  return multiplicity(min) == static_cast<std::int64_t>(min.num_generators());
}

}  // namespace tlab
