#include "adw/numerics/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "adw/core/error.hpp"

namespace adw {

MultiPoly MultiPoly::constant(int nvars, cplx c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int which) {
  MultiPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e.at(which) = 1;
  p.add_term(e, 1.0);
  return p;
}

void MultiPoly::add_term(const std::vector<int>& e, cplx c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error("MultiPoly: exponent arity mismatch");
  terms_.push_back(Term{e, c});
  normalize();
}

void MultiPoly::normalize() {
  std::map<std::vector<int>, cplx> acc;
  for (const Term& t : terms_) acc[t.e] += t.c;
  terms_.clear();
  for (auto& [e, c] : acc)
    if (c != cplx{}) terms_.push_back(Term{e, c});
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.e[var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const Term& t : terms_) {
    int s = 0;
    for (int e : t.e) s += e;
    d = std::max(d, s);
  }
  return d;
}

double MultiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.c));
  return m;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * cplx(-1.0); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      Term t;
      t.e.resize(nvars_);
      for (int k = 0; k < nvars_; ++k) t.e[k] = a.e[k] + b.e[k];
      t.c = a.c * b.c;
      r.terms_.push_back(std::move(t));
    }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::operator*(cplx s) const {
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.c *= s;
  r.normalize();
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r = MultiPoly::constant(nvars_, 1.0);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_);
  for (const Term& t : terms_) {
    if (t.e[var] == 0) continue;
    Term d = t;
    d.c *= double(d.e[var]);
    --d.e[var];
    r.terms_.push_back(std::move(d));
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::substitute(int var, cplx value) const {
  MultiPoly r(nvars_);
  for (const Term& t : terms_) {
    Term s = t;
    s.c *= std::pow(value, s.e[var]);
    s.e[var] = 0;
    r.terms_.push_back(std::move(s));
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  // Horner in var: collect coefficients ascending, fold from the top
  auto cs = coeffs_in(var);
  MultiPoly r(nvars_);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + *it;
  return r;
}

cplx MultiPoly::eval(const std::vector<cplx>& x) const {
  cplx s{};
  for (const Term& t : terms_) {
    cplx m = t.c;
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < t.e[k]; ++j) m *= x[k];
    s += m;
  }
  return s;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int var) const {
  std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(nvars_));
  for (const Term& t : terms_) {
    Term s = t;
    int k = s.e[var];
    s.e[var] = 0;
    out[k].terms_.push_back(std::move(s));
  }
  for (MultiPoly& p : out) p.normalize();
  return out;
}

CPoly MultiPoly::to_cpoly(int var) const {
  std::vector<cplx> c(degree_in(var) + 1, cplx{});
  for (const Term& t : terms_) {
    for (int k = 0; k < nvars_; ++k)
      if (k != var && t.e[k] != 0)
        throw Error("MultiPoly: not univariate in the requested variable");
    c[t.e[var]] += t.c;
  }
  return CPoly{std::move(c)};
}

MultiPoly MultiPoly::pruned(double rel) const {
  double cut = rel * max_abs_coeff();
  MultiPoly r(nvars_);
  for (const Term& t : terms_)
    if (std::abs(t.c) > cut) r.terms_.push_back(t);
  r.normalize();
  return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.c.real() << (t.c.imag() < 0 ? "" : "+") << t.c.imag() << "i)";
    for (int k = 0; k < nvars_; ++k)
      if (t.e[k] > 0) {
        os << "*" << names.at(k);
        if (t.e[k] > 1) os << "^" << t.e[k];
      }
  }
  return os.str();
}

}  // namespace adw
