#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tlab {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree and support mask.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t index, int power = 1);

  int degree() const { return degree_; }
  int exponent(std::size_t i) const { return exps_[i]; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// b / a; requires divides(a, b).
  friend Monomial quotient(const Monomial& b, const Monomial& a);

  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_ || (a.support_ & ~b.support_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] > b.exps_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::string to_string(std::span<const std::string> names) const;
  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Degree-reverse-lexicographic comparison; positive when a > b.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace tlab
