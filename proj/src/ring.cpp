#include "tlab/ring.hpp"

#include <set>

#include "tlab/errors.hpp"

namespace tlab {

RingDescriptor::RingDescriptor(std::string name, PrimeField field, std::vector<std::string> variables,
                               std::vector<Polynomial> ideal)
    : name_(std::move(name)), field_(field), variables_(std::move(variables)), ideal_(std::move(ideal)) {
  if (variables_.empty()) throw InputError("ring " + name_ + " needs at least one variable");
  if (variables_.size() > kMaxVariables) {
    throw InputError("ring " + name_ + " has more than " + std::to_string(kMaxVariables) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v).second) throw InputError("duplicate variable name " + v);
  }
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < ideal_.size(); ++i) {
    const Polynomial& f = ideal_[i];
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) {
      throw InputError("ideal generator " + std::to_string(i + 1) + " (" + to_string(f) +
                       ") is not homogeneous");
    }
    if (f.degree() < 2) {
      throw InputError("ideal generator " + std::to_string(i + 1) + " (" + to_string(f) +
                       ") has degree below two; linear forms are not allowed");
    }
    gens.push_back(ModuleElement::single(1, 0, f));
  }
  std::vector<int> twist{0};
  basis_ = buchberger(gens, twist, field_);
  for (const auto& g : basis_.generators) basis_polys_.push_back(g.component(0));
}

Ring RingDescriptor::create(std::string name, PrimeField field, std::vector<std::string> variables,
                            std::vector<Polynomial> ideal) {
  auto ring = std::shared_ptr<RingDescriptor>(
      new RingDescriptor(std::move(name), field, std::move(variables), std::move(ideal)));
  if (!ring->is_polynomial_ring()) {
    std::string ambient_name = "k[";
    for (std::size_t i = 0; i < ring->variables_.size(); ++i) {
      ambient_name += (i ? "," : "") + ring->variables_[i];
    }
    ambient_name += "]";
    ring->ambient_ = Ring(new RingDescriptor(ambient_name, field, ring->variables_, {}));
  }
  return ring;
}

Ring RingDescriptor::ambient() const {
  if (ambient_) return ambient_;
  return shared_from_this();
}

Polynomial RingDescriptor::reduce(const Polynomial& f) const {
  if (basis_polys_.empty() || f.is_zero()) return f;
  return normal_form(ModuleElement::single(1, 0, f), basis_, field_).component(0);
}

ModuleElement RingDescriptor::reduce(const ModuleElement& f) const {
  if (basis_polys_.empty() || f.is_zero()) return f;
  std::vector<Polynomial> comps = f.components();
  for (auto& c : comps) c = reduce(c);
  return ModuleElement::from_components(comps);
}

std::vector<ModuleElement> RingDescriptor::ideal_multiples(std::size_t rank) const {
  std::vector<ModuleElement> out;
  out.reserve(rank * basis_polys_.size());
  for (std::size_t c = 0; c < rank; ++c) {
    for (const auto& h : basis_polys_) out.push_back(ModuleElement::single(rank, c, h));
  }
  return out;
}

}  // namespace tlab
