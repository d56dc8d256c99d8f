#pragma once

#include <vector>

#include "adw/core/tolerances.hpp"
#include "adw/numerics/cpoly.hpp"

namespace adw {

struct Root {
  cplx value{};
  int multiplicity = 1;
};

// Roots of one member of a polynomial family. nominal_degree is the generic
// degree of the family; members whose actual degree is lower carry the
// difference as roots at infinity.
// Invariant: sum of multiplicities + at_infinity == nominal_degree.
struct RootSet {
  std::vector<Root> finite;
  int at_infinity = 0;
  int nominal_degree = 0;

  int finite_count() const {
    int n = 0;
    for (const Root& r : finite) n += r.multiplicity;
    return n;
  }
  bool has_multiple() const {
    for (const Root& r : finite)
      if (r.multiplicity > 1) return true;
    return false;
  }
};

// All roots of p, with multiplicity clustering. nominal_degree < 0 means
// "use deg p". Throws NumericalError on the zero polynomial.
RootSet poly_roots(const CPoly& p, int nominal_degree = -1,
                   const Tolerances& tol = default_tol());

}  // namespace adw
