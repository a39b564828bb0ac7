#include "tlab/module_element.hpp"

#include <algorithm>

#include "tlab/errors.hpp"

namespace tlab {

void normalize_terms(TermVector& terms, const TermOrder& order, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (out > 0 && order.compare(terms[out - 1], terms[i]) == 0) {
      terms[out - 1].coeff = field.add(terms[out - 1].coeff, terms[i].coeff);
      if (terms[out - 1].coeff == 0) --out;
    } else if (terms[i].coeff != 0) {
      terms[out++] = terms[i];
    }
  }
  terms.resize(out);
}

TermVector sub_scaled(const TermVector& a, std::size_t a_from, Coeff c, const Monomial& m,
                      const TermVector& b, std::size_t b_skip, const TermOrder& order,
                      const PrimeField& field) {
  TermVector r;
  r.reserve(a.size() - a_from + b.size() - b_skip);
  Coeff nc = field.neg(c);
  std::size_t i = a_from;
  std::size_t j = b_skip;
  ModuleTerm scaled;
  while (i < a.size() && j < b.size()) {
    scaled.monomial = b[j].monomial * m;
    scaled.component = b[j].component;
    int cmp = order.compare(a[i], scaled);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      scaled.coeff = field.mul(nc, b[j].coeff);
      r.push_back(scaled);
      ++j;
    } else {
      Coeff v = field.add(a[i].coeff, field.mul(nc, b[j].coeff));
      if (v != 0) r.push_back({a[i].monomial, a[i].component, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    r.push_back({b[j].monomial * m, b[j].component, field.mul(nc, b[j].coeff)});
  }
  return r;
}

namespace {
const TermOrder kDefaultOrder{};
}

ModuleElement ModuleElement::from_components(std::span<const Polynomial> components) {
  TermVector terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& t : components[i].terms()) {
      terms.push_back({t.monomial, static_cast<std::uint32_t>(i), t.coeff});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const ModuleTerm& a, const ModuleTerm& b) {
    return kDefaultOrder.compare(a, b) > 0;
  });
  return ModuleElement(components.size(), std::move(terms));
}

ModuleElement ModuleElement::unit(std::size_t rank, std::size_t index) {
  if (index >= rank) throw StructuralError("unit vector index out of range");
  return ModuleElement(rank, {{Monomial{}, static_cast<std::uint32_t>(index), 1}});
}

ModuleElement ModuleElement::single(std::size_t rank, std::size_t index, const Polynomial& p) {
  if (index >= rank) throw StructuralError("component index out of range");
  TermVector terms;
  for (const auto& t : p.terms()) terms.push_back({t.monomial, static_cast<std::uint32_t>(index), t.coeff});
  return ModuleElement(rank, std::move(terms));
}

// Filtering a term-over-position list by component leaves monomials descending.
Polynomial ModuleElement::component(std::size_t i) const {
  std::vector<PolyTerm> part;
  for (const auto& t : terms_) {
    if (t.component == i) part.push_back({t.monomial, t.coeff});
  }
  return Polynomial::from_sorted(std::move(part));
}

std::vector<Polynomial> ModuleElement::components() const {
  std::vector<std::vector<PolyTerm>> parts(rank_);
  for (const auto& t : terms_) parts[t.component].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.push_back(Polynomial::from_sorted(std::move(p)));
  return out;
}

std::optional<int> ModuleElement::degree(std::span<const int> twists) const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree() + twists[terms_.front().component];
}

bool ModuleElement::is_homogeneous(std::span<const int> twists) const {
  if (twists.size() != rank_) throw StructuralError("twist vector does not match rank");
  if (terms_.empty()) return true;
  int d = *degree(twists);
  for (const auto& t : terms_) {
    if (t.monomial.degree() + twists[t.component] != d) return false;
  }
  return true;
}

bool ModuleElement::has_unit_entry(std::size_t* component) const {
  for (const auto& t : terms_) {
    if (t.monomial.is_one()) {
      if (component) *component = t.component;
      return true;
    }
  }
  return false;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.component != t.component || s.coeff != t.coeff || !(s.monomial == t.monomial)) return false;
  }
  return true;
}

ModuleElement add(const ModuleElement& a, const ModuleElement& b, const PrimeField& field) {
  return sub(a, scale(b, field.neg(1), field), field);
}

ModuleElement sub(const ModuleElement& a, const ModuleElement& b, const PrimeField& field) {
  if (a.rank() != b.rank()) throw StructuralError("rank mismatch in module arithmetic");
  return ModuleElement(a.rank(), sub_scaled(a.terms(), 0, 1, Monomial{}, b.terms(), 0, kDefaultOrder, field));
}

ModuleElement scale(const ModuleElement& a, Coeff c, const PrimeField& field) {
  if (c == 0) return ModuleElement(a.rank());
  TermVector terms = a.terms();
  for (auto& t : terms) t.coeff = field.mul(t.coeff, c);
  return ModuleElement(a.rank(), std::move(terms));
}

ModuleElement mul_term(const ModuleElement& a, const Monomial& m, Coeff c, const PrimeField& field) {
  if (c == 0) return ModuleElement(a.rank());
  TermVector terms = a.terms();
  for (auto& t : terms) {
    t.monomial = t.monomial * m;
    t.coeff = field.mul(t.coeff, c);
  }
  return ModuleElement(a.rank(), std::move(terms));
}

ModuleElement mul(const Polynomial& p, const ModuleElement& a, const PrimeField& field) {
  TermVector terms;
  terms.reserve(p.size() * a.terms().size());
  for (const auto& s : p.terms()) {
    for (const auto& t : a.terms()) {
      terms.push_back({t.monomial * s.monomial, t.component, field.mul(t.coeff, s.coeff)});
    }
  }
  normalize_terms(terms, kDefaultOrder, field);
  return ModuleElement(a.rank(), std::move(terms));
}

ModuleElement embed(const ModuleElement& a, std::size_t new_rank, std::size_t offset) {
  if (a.rank() + offset > new_rank) throw StructuralError("embedding does not fit");
  TermVector terms = a.terms();
  for (auto& t : terms) t.component += static_cast<std::uint32_t>(offset);
  // Shifting all components preserves the relative order.
  return ModuleElement(new_rank, std::move(terms));
}

ModuleElement restrict_components(const ModuleElement& a, std::size_t begin, std::size_t end) {
  TermVector terms;
  for (const auto& t : a.terms()) {
    if (t.component >= begin && t.component < end) {
      terms.push_back({t.monomial, static_cast<std::uint32_t>(t.component - begin), t.coeff});
    }
  }
  return ModuleElement(end - begin, std::move(terms));
}

}  // namespace tlab
