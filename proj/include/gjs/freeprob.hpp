#pragma once

#include <gmpxx.h>

#include <string>

#include "gjs/scalar.hpp"

namespace gjs {

using Int = mpz_class;

// C_n = binomial(2n,n)/(n+1).
Int catalan(int n);
// N(n,k) = binomial(n,k) binomial(n,k-1)/n, with N(0,0) = 1.
Int narayana(int n, int k);

// Moment-level free Poisson (Marchenko-Pastur) law with rate lambda and
// jump alpha: m_n = sum_k N(n,k) lambda^k alpha^n.
struct MPLaw {
  Scalar rate;
  Scalar jump;
};
Scalar mp_moment(const MPLaw& law, int n);

// Numeric support data: atom max(1-lambda,0) at 0, support endpoints
// alpha (1 -+ sqrt(lambda))^2; invertible iff the law misses 0 entirely.
struct MPSupport {
  double atom_mass = 0;
  double support_min = 0;
  double support_max = 0;
  bool invertible = false;
};
MPSupport mp_support(double rate, double jump);

// n-th moment of the TL cup under the degree-zero trace, computed by the
// full capping enumeration (equals mp_moment(rate=d, jump=1, n)).
Scalar cup_moment(int n);

// Qualitative corner-law verdicts for an edge between weights alpha_w and
// beta_w (or a loop): which corner laws touch 0 and the atom size.
std::string edge_law_report(double alpha_w, double beta_w, bool loop,
                            double tol = 1e-9);

}  // namespace gjs
