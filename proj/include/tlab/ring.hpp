#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tlab/groebner.hpp"

namespace tlab {

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

/// Standard graded algebra S/I over a prime field, S = k[x_1..x_n] with all
/// variables in degree one. The reduced Gröbner basis of I is computed once
/// at construction.
class RingDescriptor : public std::enable_shared_from_this<RingDescriptor> {
 public:
  /// Throws InputError for bad variable lists, non-homogeneous generators or
  /// generators of degree below two.
  static Ring create(std::string name, PrimeField field, std::vector<std::string> variables,
                     std::vector<Polynomial> ideal);

  const std::string& name() const { return name_; }
  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  /// Reduced Gröbner basis of I as rank-one elements.
  const GroebnerBasis& ideal_basis() const { return basis_; }
  const std::vector<Polynomial>& ideal_basis_polynomials() const { return basis_polys_; }
  bool is_polynomial_ring() const { return basis_polys_.empty(); }

  /// The polynomial ring S with the same field and variables.
  Ring ambient() const;

  Polynomial reduce(const Polynomial& f) const;
  /// Componentwise normal form modulo I.
  ModuleElement reduce(const ModuleElement& f) const;

  /// h * e_c for every basis element h of I and every c < rank.
  std::vector<ModuleElement> ideal_multiples(std::size_t rank) const;

  std::string to_string(const Polynomial& f) const { return f.to_string(variables_, field_); }

 private:
  RingDescriptor(std::string name, PrimeField field, std::vector<std::string> variables,
                 std::vector<Polynomial> ideal);

  std::string name_;
  PrimeField field_;
  std::vector<std::string> variables_;
  std::vector<Polynomial> ideal_;
  GroebnerBasis basis_;
  std::vector<Polynomial> basis_polys_;
  Ring ambient_;
};

}  // namespace tlab
