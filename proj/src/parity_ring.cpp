// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/parity_ring.hpp"

#include <ostream>
#include <sstream>

namespace qtrep {

GradedInt theta_pow(unsigned k) {
  if (k == 0) return GradedInt(1, 0);
  Int half = pow2(k - 1);
  return GradedInt(half, half);
}

Int theta_div_total(const GradedInt& x, unsigned k) {
  if (k >= 1 && eval_minus(x) != 0) {
    throw NotThetaDivisible("value " + to_string(x) +
                            " is not a multiple of theta (eval_minus != 0), "
                            "cannot divide by theta^" +
                            std::to_string(k));
  }
  Int total = eval_plus(x);
  if (k >= 1) {
    Int d = pow2(k);
    if (total % d != 0) {
      throw NotThetaDivisible("total dimension " + total.str() +
                              " is not divisible by 2^" + std::to_string(k));
    }
    total /= d;
  }
  return total;
}

std::string to_string(const GradedInt& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  if (x.one != 0) os << x.one;
  if (x.eps != 0) {
    if (x.one != 0) {
      os << (x.eps > 0 ? " + " : " - ");
      Int abs_eps = x.eps > 0 ? x.eps : Int(-x.eps);
      if (abs_eps != 1) os << abs_eps << "*";
    } else {
      if (x.eps == -1)
        os << "-";
      else if (x.eps != 1)
        os << x.eps << "*";
    }
    os << "eps";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedInt& x) {
  return os << to_string(x);
}

}  // namespace qtrep
