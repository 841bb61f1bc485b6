#pragma once

#include <vector>

#include "gjs/linalg.hpp"
#include "gjs/tl_element.hpp"

namespace gjs {

// Quasi-basis data for the two-strand conditional expectation
// E: TL_{2n} -> TL_{2(n-1)} (close the two rightmost strands, delta^{-2}).
// Each generator u_i comes with the support pseudo-inverse dplus_i of
// d_i = E(u_i* u_i); together they reconstruct every x as
//   x = sum_i u_i . iota(dplus_i . E(u_i* x)).
struct QuasiBasis {
  int n = 1;
  std::vector<TLElement> u;      // in TL_{2n}
  std::vector<TLElement> dplus;  // in TL_{2(n-1)}
};

// E: TL_{2n} -> TL_{2(n-1)}, the rightmost-two-strand expectation.
TLElement down_expectation(const TLElement& x);
// iota: TL_{2(n-1)} -> TL_{2n}, tensor two identity strands on the right.
TLElement up_include(const TLElement& a);

// Minimal polynomial of x inside its TL algebra (ascending coefficients,
// monic), found by exact elimination on the powers of x.
std::vector<Scalar> tl_minimal_polynomial(const TLElement& x);

// Generalized inverse with d dplus d = d and dplus in the unital algebra
// generated by d: the inverse when d is invertible, otherwise p(d) with
// p(t) = (nu(0) - nu(t)) / (t nu(0)) for the minimal polynomial t nu(t).
TLElement support_pseudo_inverse(const TLElement& d);

// Module Gram-Schmidt over the diagram basis of TL_{2n}.
QuasiBasis quasi_basis(int n);

// Does sum_i u_i . iota(dplus_i . E(u_i* x)) equal x?
bool reconstructs(const QuasiBasis& qb, const TLElement& x);

// The index element sum_i u_i . iota(dplus_i) . u_i* of the quasi-basis.
TLElement index_element(const QuasiBasis& qb);

}  // namespace gjs
