#include "adw/numerics/cpoly.hpp"

#include <algorithm>
#include <cmath>

namespace adw {

CPoly::CPoly(std::vector<cplx> ascending) : coeffs_(std::move(ascending)) { trim(); }

CPoly::CPoly(std::initializer_list<cplx> ascending) : coeffs_(ascending) { trim(); }

CPoly CPoly::constant(cplx c) { return CPoly{std::vector<cplx>{c}}; }

CPoly CPoly::monomial(int degree, cplx c) {
  std::vector<cplx> v(degree + 1, cplx{});
  v.back() = c;
  return CPoly{std::move(v)};
}

CPoly CPoly::from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx{});
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return CPoly{std::move(c)};
}

void CPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

cplx CPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return cplx{};
  return coeffs_[k];
}

double CPoly::max_abs_coeff() const {
  double m = 0.0;
  for (cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx CPoly::eval(cplx x) const {
  cplx p{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * x + *it;
  return p;
}

void CPoly::eval2(cplx x, cplx& p, cplx& dp) const {
  p = dp = cplx{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
}

CPoly CPoly::derivative() const {
  if (coeffs_.size() <= 1) return CPoly{};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * cplx(double(k), 0.0);
  return CPoly{std::move(d)};
}

CPoly CPoly::trimmed(double rel) const {
  double cut = rel * max_abs_coeff();
  std::vector<cplx> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return CPoly{std::move(c)};
}

CPoly CPoly::operator+(const CPoly& o) const {
  std::vector<cplx> c(std::max(coeffs_.size(), o.coeffs_.size()), cplx{});
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return CPoly{std::move(c)};
}

CPoly CPoly::operator-(const CPoly& o) const {
  std::vector<cplx> c(std::max(coeffs_.size(), o.coeffs_.size()), cplx{});
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return CPoly{std::move(c)};
}

CPoly CPoly::operator*(const CPoly& o) const {
  if (is_zero() || o.is_zero()) return CPoly{};
  std::vector<cplx> c(coeffs_.size() + o.coeffs_.size() - 1, cplx{});
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return CPoly{std::move(c)};
}

CPoly CPoly::operator*(cplx s) const {
  std::vector<cplx> c = coeffs_;
  for (cplx& x : c) x *= s;
  return CPoly{std::move(c)};
}

}  // namespace adw
