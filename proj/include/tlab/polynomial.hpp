#pragma once

#include <span>
#include <string>
#include <vector>

#include "tlab/field.hpp"
#include "tlab/monomial.hpp"

namespace tlab {

struct PolyTerm {
  Monomial monomial;
  Coeff coeff = 0;
};

/// Sparse polynomial; terms strictly descending in degrevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Coeff c);
  static Polynomial term(const Monomial& m, Coeff c = 1);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(std::vector<PolyTerm> terms, const PrimeField& field);
  /// Trusts the caller: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(std::vector<PolyTerm> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const PolyTerm& lead() const { return terms_.front(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  bool is_homogeneous() const;
  /// Nonzero polynomial of degree zero.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().monomial.is_one(); }

  std::string to_string(std::span<const std::string> names, const PrimeField& field) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<PolyTerm> terms_;
  friend Polynomial add(const Polynomial&, const Polynomial&, const PrimeField&);
  friend Polynomial scale(const Polynomial&, Coeff, const PrimeField&);
  friend Polynomial mul_term(const Polynomial&, const Monomial&, Coeff, const PrimeField&);
};

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& field);
Polynomial scale(const Polynomial& a, Coeff c, const PrimeField& field);
Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c, const PrimeField& field);
Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& field);
Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& field);

}  // namespace tlab
