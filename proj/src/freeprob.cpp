#include "gjs/freeprob.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "gjs/boxes.hpp"

namespace gjs {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::string num_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Int catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / Int(n + 1);
}

Int narayana(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("narayana: indices out of range");
  if (n == 0) return 1;  // N(0,0): empty-sum convention matching C_0 = 1
  if (k == 0) return 0;
  return binomial(n, k) * binomial(n, k - 1) / Int(n);
}

Scalar mp_moment(const MPLaw& law, int n) {
  if (n < 0) throw std::invalid_argument("mp_moment: negative index");
  Scalar total = Scalar::zero();
  for (int k = 0; k <= n; ++k)
    total = total + Scalar(Rat(narayana(n, k))) * law.rate.pow(k);
  return total * law.jump.pow(n);
}

MPSupport mp_support(double rate, double jump) {
  if (rate < 0) throw std::invalid_argument("mp_support: negative rate");
  MPSupport out;
  out.atom_mass = std::max(1.0 - rate, 0.0);
  const double root = std::sqrt(rate);
  out.support_min = jump * (1.0 - root) * (1.0 - root);
  out.support_max = jump * (1.0 + root) * (1.0 + root);
  out.invertible = rate > 1.0;  // support away from 0 and no atom
  return out;
}

Scalar cup_moment(int n) {
  if (n < 0) throw std::invalid_argument("cup_moment: negative index");
  const GJSElement cup = GJSElement::box(GJSElement::Convention::Graded,
                                         BoxShape{0, 2, 0}, {{1, 2}});
  GJSElement power = GJSElement::unit(GJSElement::Convention::Graded, 0);
  for (int i = 0; i < n; ++i) power = wedge(power, cup);
  return voiculescu_trace(power, 0);
}

std::string edge_law_report(double alpha_w, double beta_w, bool loop,
                            double tol) {
  if (alpha_w <= 0 || (!loop && beta_w <= 0))
    throw std::invalid_argument("edge_law_report: weights must be positive");
  std::ostringstream out;
  if (loop) {
    out << "loop edge: Free-Poisson law, no atom, support contains 0\n";
    return out.str();
  }
  if (std::abs(alpha_w - beta_w) <= tol) {
    out << "equal weights: both corner laws are Free-Poisson with support "
           "containing 0, no atoms\n";
    return out.str();
  }
  const double big = std::max(alpha_w, beta_w);
  const double small = std::min(alpha_w, beta_w);
  out << "smaller corner (mu = " << num_str(small)
      << "): Free-Poisson law supported away from the origin, no atom\n";
  out << "larger corner (mu = " << num_str(big)
      << "): atom of mass mu_big - mu_small = " << num_str(big - small)
      << " at 0\n";
  return out.str();
}

}  // namespace gjs
