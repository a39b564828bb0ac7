#include "tlab/polynomial.hpp"

#include <algorithm>

namespace tlab {

Polynomial Polynomial::constant(Coeff c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::term(const Monomial& m, Coeff c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<PolyTerm> terms, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return degrevlex_compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names, const PrimeField& field) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = field.to_signed(terms_[i].coeff);
    if (i > 0) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::int64_t mag = c < 0 ? -c : c;
    const Monomial& m = terms_[i].monomial;
    if (m.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) {
      return false;
    }
  }
  return true;
}

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& field) {
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = degrevlex_compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Coeff s = field.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({a.terms_[i].monomial, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), a.terms_.begin() + i, a.terms_.end());
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + j, b.terms_.end());
  return r;
}

Polynomial scale(const Polynomial& a, Coeff c, const PrimeField& field) {
  Polynomial r;
  if (c == 0) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, c);
  return r;
}

Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c, const PrimeField& field) {
  Polynomial r;
  if (c == 0) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({t.monomial * m, field.mul(t.coeff, c)});
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& field) {
  return add(a, scale(b, field.neg(1), field), field);
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& field) {
  std::vector<PolyTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      terms.push_back({s.monomial * t.monomial, field.mul(s.coeff, t.coeff)});
    }
  }
  return Polynomial::from_terms(std::move(terms), field);
}

}  // namespace tlab
