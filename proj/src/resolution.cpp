#include "tlab/resolution.hpp"

#include <stdexcept>

#include "tlab/errors.hpp"

namespace tlab {

namespace {

HomogeneousMap next_map(const Ring& ring, const HomogeneousMap& d) {
  HomogeneousMap next;
  next.target = d.source;
  next.columns = preimage_kernel(ring, d);
  for (const auto& c : next.columns) next.source.twists.push_back(*c.degree(next.target.twists));
  return next;
}

}  // namespace

Resolution resolve(const PresentedModule& m, std::size_t length) {
  Resolution res;
  res.ring = m.ring;
  res.target = minimalize(m);
  res.modules.push_back(res.target.presentation.target);
  if (res.target.num_generators() == 0) res.finite = true;
  extend(res, length);
  return res;
}

void extend(Resolution& res, std::size_t length) {
  while (res.maps.size() < length && !res.finite) {
    HomogeneousMap d;
    if (res.maps.empty()) {
      d = res.target.presentation;
    } else {
      d = next_map(res.ring, res.maps.back());
    }
    if (d.columns.empty()) {
      res.finite = true;
      break;
    }
    res.modules.push_back(d.source);
    res.maps.push_back(std::move(d));
  }
}

PresentedModule syzygy_from(const Resolution& res, std::size_t n) {
  if (n == 0) return res.target;
  if (n >= res.modules.size()) {
    if (res.finite) return PresentedModule::zero(res.ring);
    throw StructuralError("resolution too short for syzygy " + std::to_string(n));
  }
  PresentedModule out{res.ring, {}, true};
  out.presentation.target = res.modules[n];
  if (n < res.maps.size()) {
    out.presentation = res.maps[n];
  } else if (!res.finite) {
    throw StructuralError("resolution too short for syzygy " + std::to_string(n));
  }
  return out;
}

PresentedModule syzygy(const PresentedModule& m, std::size_t n) {
  return syzygy_from(resolve(m, n + 1), n);
}

Resolution resolve_over_ambient(const PresentedModule& m) {
  const Ring& ring = m.ring;
  Ring s = ring->ambient();
  std::vector<ModuleElement> rels = m.relations();
  const std::size_t rank = m.num_generators();
  for (const auto& h : ring->ideal_multiples(rank)) rels.push_back(h);
  PresentedModule over_s = PresentedModule::cokernel(s, m.generator_degrees(), std::move(rels));
  const std::size_t bound = s->num_variables() + 1;
  Resolution res = resolve(over_s, bound + 1);
  if (!res.finite) {
    throw std::logic_error("resolution over the polynomial ring did not terminate by step " +
                           std::to_string(bound));
  }
  return res;
}

BettiTable betti_table(const Resolution& res) {
  BettiTable t;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    t.totals.push_back(res.modules[i].rank());
    for (int d : res.modules[i].twists) ++t.graded[{i, d}];
  }
  while (!t.totals.empty() && t.totals.back() == 0) t.totals.pop_back();
  return t;
}

void check_complex(const Resolution& res) {
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    check_homogeneous(res.maps[i]);
    if (!res.maps[i].is_minimal()) {
      throw StructuralError("map d_" + std::to_string(i + 1) + " has a unit entry");
    }
    if (i + 1 < res.maps.size()) {
      HomogeneousMap c = compose(res.maps[i], res.maps[i + 1], res.ring);
      if (!c.is_zero()) {
        throw StructuralError("d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2) + " is nonzero");
      }
    }
  }
}

}  // namespace tlab
