#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gjs/diagram.hpp"
#include "gjs/scalar.hpp"

namespace gjs {

// A box with l left, n top, r right strings. Boundary positions are numbered
// 1..l+n+r: left side bottom-to-top, then top left-to-right, then right side
// top-to-bottom. Contents are non-crossing pairings of the positions.
struct BoxShape {
  int l = 0, n = 0, r = 0;
  int total() const { return l + n + r; }
  auto operator<=>(const BoxShape&) const = default;
  std::string str() const {
    return "(" + std::to_string(l) + "," + std::to_string(n) + "," +
           std::to_string(r) + ")";
  }
};

// Sparse linear combination of shaped boxes with TL contents. The convention
// tag records which multiplication the element lives under; mixing graded and
// filtered elements is a hard error (the change of convention is phi below).
class GJSElement {
 public:
  enum class Convention { Graded, Filtered };

  explicit GJSElement(Convention conv) : conv_(conv) {}

  static GJSElement zero(Convention conv) { return GJSElement(conv); }
  // Single box term. Arcs use the box position numbering.
  static GJSElement box(Convention conv, const BoxShape& shape, ArcList arcs,
                        const Scalar& coeff = Scalar(1));
  // k nested through strands: the unit 1_k of Gr_k (positions h and 2k+1-h).
  static GJSElement unit(Convention conv, int k);

  Convention convention() const { return conv_; }
  const std::map<BoxShape, std::map<ArcList, Scalar>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const;

  void add_term(const BoxShape& shape, const ArcList& arcs, const Scalar& c);
  Scalar coeff(const BoxShape& shape, const ArcList& arcs) const;

  GJSElement operator-() const;
  GJSElement operator+(const GJSElement& o) const;
  GJSElement operator-(const GJSElement& o) const;
  GJSElement operator*(const Scalar& c) const;
  bool operator==(const GJSElement& o) const {
    return conv_ == o.conv_ && terms_ == o.terms_;
  }
  bool operator!=(const GJSElement& o) const { return !(*this == o); }

  // `shape(l,n,r){ (c) * 0,m:[(i,j),...] + ... } + ...`
  std::string str() const;

 private:
  Convention conv_;
  std::map<BoxShape, std::map<ArcList, Scalar>> terms_;
};

// Reflection through the vertical axis: position p -> m+1-p, shape
// (l,n,r) -> (r,n,l). Involutive; reverses both multiplications.
GJSElement box_adjoint(const GJSElement& x);

// Graded multiplication on Gr_infty: joins x's right strings to y's left
// strings (zero on mismatched counts); closed loops contribute delta each.
GJSElement wedge(const GJSElement& x, const GJSElement& y);

// The Gr_k multiplication: wedge restricted to elements all of whose shapes
// have l = r = k (hard error otherwise).
GJSElement graded_mul(const GJSElement& x, const GJSElement& y, int k);

// Normalized Voiculescu trace tau_k on Gr_k: delta^{-k} times the sum over
// all TL cappings of the top strings with the side strings closed around.
Scalar voiculescu_trace(const GJSElement& x, int k);

// Non-normalized semifinite trace on Gr_infty: per term zero unless l = r,
// else the capping sum with the side closure.
Scalar tau_infty(const GJSElement& x);

// Filtered (partial-capping) multiplication: sum over j of joining the
// adjacent j top strings between the boxes.
GJSElement filtered_mul(const GJSElement& x, const GJSElement& y);

// Trace in the filtered convention: only (l,0,l) terms contribute, by their
// closed-diagram loop count.
Scalar filtered_trace(const GJSElement& x);

// Change of convention: sum over all top-capping diagrams with no top-to-top
// arc (enumerate_epi), stacked on the top strings. Graded in, filtered out.
GJSElement phi(const GJSElement& x);

// Jones projection e_k in Gr_{k+1} (graded): delta^{-1} times the box with
// the bottom left/right pair capped/cupped and k-1 through strands above.
GJSElement jones_projection(int k);

// Trace-preserving conditional expectation Gr_{k+1} -> Gr_k: glue the
// outermost strand pair below, times delta^{-1}. k+1 inferred from shapes.
GJSElement cond_expectation(const GJSElement& x);

// Inclusion Gr_k -> Gr_{k+1}: add one strand below (l, r grow by one).
GJSElement include_up(const GJSElement& x);

// 1_k x 1_k in the filtered picture: restriction to terms with l = r = k.
GJSElement compress(const GJSElement& x, int k);

// Pull-down identity x e_k = delta^2 E_{k+1}(x e_k) e_k for x in Gr_{k+1}.
bool check_pulldown(const GJSElement& x, int k);

// B-valued pairing <x|y>: glue x† to y along left sides and all top strings;
// zero unless the terms agree in l and n. Result boxes have shape (r,0,r').
// Convention tags are ignored (this is bimodule, not algebra, structure).
GJSElement inner_product_B(const GJSElement& x, const GJSElement& y);

// All non-crossing contents for an m-point box (m even; empty list if odd).
std::vector<ArcList> all_box_contents(int m);
// All shapes with total l+n+r = s.
std::vector<BoxShape> all_shapes_total(int s);

}  // namespace gjs
