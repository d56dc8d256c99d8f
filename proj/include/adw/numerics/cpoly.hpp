#pragma once

#include <initializer_list>
#include <vector>

#include "adw/core/types.hpp"

namespace adw {

// Univariate polynomial with complex coefficients, ascending order.
// Invariant: exact-zero leading coefficients are trimmed, so either
// coeffs_ is empty (the zero polynomial) or coeffs_.back() != 0.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<cplx> ascending);
  CPoly(std::initializer_list<cplx> ascending);

  static CPoly constant(cplx c);
  static CPoly monomial(int degree, cplx c = 1.0);
  // monic polynomial with the given roots
  static CPoly from_roots(const std::vector<cplx>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  cplx coeff(int k) const;
  cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  double max_abs_coeff() const;

  cplx eval(cplx x) const;
  // value and first derivative in one pass
  void eval2(cplx x, cplx& p, cplx& dp) const;
  CPoly derivative() const;
  // copy with leading coefficients below rel*max|coeff| removed
  CPoly trimmed(double rel) const;

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(cplx s) const;
  CPoly& operator+=(const CPoly& o) { return *this = *this + o; }
  CPoly& operator-=(const CPoly& o) { return *this = *this - o; }

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

}  // namespace adw
