#include "tlab/monomial.hpp"

#include "tlab/errors.hpp"

namespace tlab {

void Monomial::refresh() {
  int deg = 0;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    deg += exps_[i];
    if (exps_[i] != 0) mask |= 1u << i;
  }
  degree_ = static_cast<std::uint16_t>(deg);
  support_ = mask;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0x3fff) throw InputError("exponent out of range");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(std::size_t index, int power) {
  if (index >= kMaxVariables) throw InputError("variable index out of range");
  Monomial m;
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.refresh();
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = b.exps_[i] - a.exps_[i];
  r.refresh();
  return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

}  // namespace tlab
