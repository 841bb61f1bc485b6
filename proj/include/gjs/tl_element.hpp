#pragma once

#include <map>
#include <string>

#include "gjs/diagram.hpp"
#include "gjs/scalar.hpp"

namespace gjs {

// A formal linear combination of TL diagrams sharing one boundary shape.
// Zero coefficients are pruned; term order is the canonical diagram order,
// so printing and iteration are deterministic.
class TLElement {
 public:
  TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}

  static TLElement from_diagram(const TLDiagram& D, const Scalar& c = Scalar(1));
  static TLElement identity(int n);
  // Cap-cup generator e_i in TL_n (1 <= i <= n-1), no normalization.
  static TLElement e_gen(int n, int i);

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  const std::map<TLDiagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const TLDiagram& D, const Scalar& c);
  const Scalar& coeff(const TLDiagram& D) const;

  TLElement operator-() const;
  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement operator*(const Scalar& c) const;
  bool operator==(const TLElement& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && terms_ == o.terms_;
  }
  bool operator!=(const TLElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_shape(const TLDiagram& D) const;
  int bottom_, top_;
  std::map<TLDiagram, Scalar> terms_;
};

// Algebra product on n -> n elements: stacking with a factor of delta per
// closed loop.
TLElement tl_mul(const TLElement& x, const TLElement& y);

TLElement adjoint(const TLElement& x);

// Right closure of a square element: per diagram delta^(closure loops).
// normalized divides by delta^n.
Scalar markov_trace(const TLElement& x, bool normalized = false);

// Close the rightmost strand and multiply by delta^(-1):
// TL_n -> TL_{n-1}, trace-compatible (Tr = delta * Tr after E).
TLElement cond_expectation_tl(const TLElement& x);

// x tensor identity on k extra right strands.
TLElement tensor_identity(const TLElement& x, int k);

// Jones-Wenzl idempotent f_n via the Wenzl recursion
// f_{n+1} = f_n - ([n]/[n+1]) f_n e_n f_n. The DeltaSpec guards against
// vanishing quantum integers [k], k <= n+1, at specializations; the element
// itself is always computed at symbolic delta.
TLElement jones_wenzl(int n, const DeltaSpec& spec = DeltaSpec::generic());

// <x, y> = Tr(x† y).
Scalar trace_pairing(const TLElement& x, const TLElement& y);

}  // namespace gjs
