#include "gjs/quasibasis.hpp"

#include <map>
#include <stdexcept>

namespace gjs {

namespace {

// Diagram basis of TL_N in a fixed deterministic order.
std::vector<TLDiagram> tl_basis(int n) {
  std::vector<TLDiagram> out;
  for (const auto& p : enumerate_pairings(2 * n))
    out.push_back(TLDiagram(n, n, p.arcs()));
  return out;
}

std::vector<Scalar> flatten(const TLElement& x,
                            const std::map<ArcList, std::size_t>& index) {
  std::vector<Scalar> v(index.size(), Scalar(0));
  for (const auto& [diag, c] : x.terms()) v[index.at(diag.arcs())] = c;
  return v;
}

// Horner evaluation of a polynomial (ascending coefficients) at a TL element.
TLElement eval_poly(const std::vector<Scalar>& coeffs, const TLElement& x) {
  const int n = x.bottom_count();
  TLElement acc = TLElement(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = tl_mul(acc, x) + TLElement::identity(n) * (*it);
  return acc;
}

}  // namespace

TLElement down_expectation(const TLElement& x) {
  return cond_expectation_tl(cond_expectation_tl(x));
}

TLElement up_include(const TLElement& a) { return tensor_identity(a, 2); }

std::vector<Scalar> tl_minimal_polynomial(const TLElement& x) {
  const int n = x.bottom_count();
  if (x.top_count() != n)
    throw std::invalid_argument("minimal polynomial needs a square element");
  std::map<ArcList, std::size_t> index;
  for (const auto& d : tl_basis(n)) index.emplace(d.arcs(), index.size());
  EchelonBasis span(index.size());
  TLElement power = TLElement::identity(n);
  while (true) {
    auto rep = span.insert(flatten(power, index));
    if (rep) {
      // power of degree k depends on lower powers: t^k - sum rep_j t^j.
      std::vector<Scalar> mu(rep->size() + 1, Scalar(0));
      for (std::size_t j = 0; j < rep->size(); ++j) mu[j] = -(*rep)[j];
      mu.back() = Scalar(1);
      return mu;
    }
    power = tl_mul(power, x);
  }
}

TLElement support_pseudo_inverse(const TLElement& d) {
  const auto mu = tl_minimal_polynomial(d);
  if (mu.size() == 1)  // minimal polynomial 1 happens only in the 0 algebra
    throw std::invalid_argument("support_pseudo_inverse: degenerate element");
  if (!mu[0].is_zero()) {
    // Invertible: d^{-1} = -mu_0^{-1} (mu_1 + mu_2 d + ... + mu_m d^{m-1}).
    std::vector<Scalar> inv_coeffs(mu.begin() + 1, mu.end());
    const Scalar scale = -mu[0].inverse();
    for (auto& c : inv_coeffs) c = c * scale;
    return eval_poly(inv_coeffs, d);
  }
  // mu(t) = t nu(t); squarefree support needs nu(0) != 0.
  std::vector<Scalar> nu(mu.begin() + 1, mu.end());
  if (nu[0].is_zero())
    throw std::runtime_error(
        "support_pseudo_inverse: support of the element is not split by its "
        "minimal polynomial (double root at zero)");
  // p(t) = (nu(0) - nu(t)) / (t nu(0)) = -sum_{j>=1} nu_j t^{j-1} / nu(0).
  std::vector<Scalar> p(nu.size() - 1, Scalar(0));
  const Scalar scale = -nu[0].inverse();
  for (std::size_t j = 1; j < nu.size(); ++j) p[j - 1] = nu[j] * scale;
  return eval_poly(p, d);
}

QuasiBasis quasi_basis(int n) {
  if (n < 1) throw std::invalid_argument("quasi_basis: n must be >= 1");
  QuasiBasis qb;
  qb.n = n;
  for (const auto& b : tl_basis(2 * n)) {
    TLElement v = TLElement::from_diagram(b);
    for (std::size_t i = 0; i < qb.u.size(); ++i) {
      const TLElement overlap =
          tl_mul(qb.dplus[i], down_expectation(tl_mul(adjoint(qb.u[i]), v)));
      v = v - tl_mul(qb.u[i], up_include(overlap));
    }
    if (v.is_zero()) continue;
    const TLElement d = down_expectation(tl_mul(adjoint(v), v));
    if (d.is_zero())
      throw std::runtime_error("quasi_basis: expectation lost faithfulness");
    qb.u.push_back(v);
    qb.dplus.push_back(support_pseudo_inverse(d));
  }
  return qb;
}

bool reconstructs(const QuasiBasis& qb, const TLElement& x) {
  TLElement acc(x.bottom_count(), x.top_count());
  for (std::size_t i = 0; i < qb.u.size(); ++i) {
    const TLElement overlap =
        tl_mul(qb.dplus[i], down_expectation(tl_mul(adjoint(qb.u[i]), x)));
    acc = acc + tl_mul(qb.u[i], up_include(overlap));
  }
  return acc == x;
}

TLElement index_element(const QuasiBasis& qb) {
  TLElement acc(2 * qb.n, 2 * qb.n);
  for (std::size_t i = 0; i < qb.u.size(); ++i)
    acc = acc + tl_mul(tl_mul(qb.u[i], up_include(qb.dplus[i])),
                       adjoint(qb.u[i]));
  return acc;
}

}  // namespace gjs
