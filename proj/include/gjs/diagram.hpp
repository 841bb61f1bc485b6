#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gjs {

// Raised when two diagrams/elements cannot be combined (strand mismatch,
// convention mismatch, ...).
struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

using Arc = std::pair<int, int>;
using ArcList = std::vector<Arc>;

// A Temperley-Lieb diagram: a non-crossing perfect matching of
// bottom + top boundary points. Points are indexed globally counterclockwise:
// bottom 1..b left-to-right, then top b+1..b+t right-to-left. Planarity is
// then exactly "non-crossing matching on a circle".
//
// Arcs are canonicalized ((i,j) with i<j, list sorted), so equality and
// ordering are structural.
class TLDiagram {
 public:
  TLDiagram(int bottom, int top, ArcList arcs);

  int bottom_count() const { return bottom_; }
  int top_count() const { return top_; }
  int total() const { return bottom_ + top_; }
  const ArcList& arcs() const { return arcs_; }

  // Partner of point p (1-based global index).
  int partner(int p) const;

  auto operator<=>(const TLDiagram& o) const = default;

  // Text form `b,t:[(i,j),...]`; round-trips with parse().
  std::string str() const;
  static TLDiagram parse(const std::string& text);

  static TLDiagram identity(int n);   // n -> n, arcs (i, 2n+1-i)
  static TLDiagram empty() { return TLDiagram(0, 0, {}); }

 private:
  int bottom_, top_;
  ArcList arcs_;
};

// True iff `arcs` is a perfect non-crossing matching of 1..total.
bool is_planar_matching(int total, const ArcList& arcs);

// All non-crossing perfect matchings of n points (bottom n, top 0), in
// deterministic lexicographic order. Odd or negative n gives an empty list.
std::vector<TLDiagram> enumerate_pairings(int n);

// Vertical stacking lower;upper (lower's top glued to upper's bottom).
// Returns the composite diagram and the number of closed loops removed.
std::pair<TLDiagram, int> compose(const TLDiagram& lower, const TLDiagram& upper);

// Horizontal placement: a to the left of b; bottom/top counts add.
TLDiagram juxtapose(const TLDiagram& a, const TLDiagram& b);

// Vertical reflection: bottom and top swap; involution.
TLDiagram adjoint(const TLDiagram& D);

// All planar diagrams with b bottom points, t <= b top points and no
// top-to-top arc (every top point connects to the bottom). Ordered by
// descending top count, then lexicographically. These index the terms of the
// graded-to-filtered change of convention.
std::vector<TLDiagram> enumerate_epi(int b);

// Core gluing engine: two arc families A (on 1..nA) and B (on 1..nB), plus
// glue edges joining A-points to B-points. Points with keepA/keepB >= 1 are
// external and get relabeled to their keep value; internal points must be
// covered by glue edges. Returns surviving arcs (on the external labels) and
// the number of closed loops.
std::pair<ArcList, int> glue_arcs(const ArcList& arcsA, int nA,
                                  const ArcList& arcsB, int nB,
                                  const std::vector<Arc>& glue,
                                  const std::vector<int>& keepA,
                                  const std::vector<int>& keepB);

// Same engine for gluing a diagram to itself: `glue` joins points of one arc
// family on 1..n. keep[p-1] >= 1 relabels point p; glued points must have
// keep 0.
std::pair<ArcList, int> self_glue(const ArcList& arcs, int n,
                                  const std::vector<Arc>& glue,
                                  const std::vector<int>& keep);

}  // namespace gjs
