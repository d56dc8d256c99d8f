#pragma once

#include <string>
#include <vector>

#include "adw/core/types.hpp"
#include "adw/numerics/cpoly.hpp"

namespace adw {

// Sparse multivariate polynomial over a fixed number of variables.
// Terms are kept sorted by exponent vector with like terms merged.
class MultiPoly {
 public:
  struct Term {
    std::vector<int> e;  // one exponent per variable
    cplx c;
  };

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, cplx c);
  static MultiPoly variable(int nvars, int which);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int degree_in(int var) const;
  int total_degree() const;
  double max_abs_coeff() const;

  void add_term(const std::vector<int>& e, cplx c);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(cplx s) const;
  MultiPoly pow(int k) const;

  MultiPoly derivative(int var) const;
  // substitute variable var by value (polynomial keeps its variable count)
  MultiPoly substitute(int var, cplx value) const;
  // substitute variable var by another polynomial over the same variables
  MultiPoly substitute(int var, const MultiPoly& value) const;
  cplx eval(const std::vector<cplx>& x) const;

  // view as univariate in var with MultiPoly coefficients (ascending)
  std::vector<MultiPoly> coeffs_in(int var) const;
  // requires all terms free of every variable except var
  CPoly to_cpoly(int var) const;
  // drop coefficients below rel*max|coeff|
  MultiPoly pruned(double rel) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace adw
