#include "gjs/fock.hpp"

#include <stdexcept>

namespace gjs {

namespace {

void require_single_top(const GJSElement& x, const char* op) {
  if (x.convention() != GJSElement::Convention::Graded)
    throw std::invalid_argument(std::string(op) +
                                ": operator symbol must be graded");
  for (const auto& [shape, content] : x.terms())
    if (shape.n != 1)
      throw std::invalid_argument(
          std::string(op) + ": operator symbol must have one top string");
}

}  // namespace

FockVector FockVector::from(int cutoff, const GJSElement& v) {
  if (cutoff < 0) throw std::invalid_argument("fock: negative cutoff");
  if (v.convention() != GJSElement::Convention::Graded)
    throw std::invalid_argument("fock: vectors use the graded convention");
  for (const auto& [shape, content] : v.terms())
    if (shape.n > cutoff)
      throw std::invalid_argument("fock: component degree exceeds cutoff");
  return FockVector{cutoff, false, v};
}

FockVector FockVector::operator+(const FockVector& o) const {
  if (cutoff != o.cutoff)
    throw std::invalid_argument("fock: adding vectors of different cutoffs");
  return FockVector{cutoff, truncated || o.truncated, value + o.value};
}

FockVector FockVector::operator*(const Scalar& c) const {
  return FockVector{cutoff, truncated, value * c};
}

std::string FockVector::str() const {
  std::string out = value.str();
  if (truncated) out += " [truncated]";
  return out;
}

FockVector fock_create(const GJSElement& x, const FockVector& v) {
  require_single_top(x, "fock_create");
  GJSElement raised = wedge(x, v.value);
  FockVector out{v.cutoff, v.truncated, GJSElement(raised.convention())};
  for (const auto& [shape, content] : raised.terms()) {
    if (shape.n > v.cutoff) {
      out.truncated = true;
      continue;
    }
    for (const auto& [arcs, c] : content) out.value.add_term(shape, arcs, c);
  }
  return out;
}

FockVector fock_annihilate(const GJSElement& x, const FockVector& v) {
  require_single_top(x, "fock_annihilate");
  FockVector out{v.cutoff, v.truncated,
                 GJSElement(GJSElement::Convention::Graded)};
  for (const auto& [sx, cx] : x.terms()) {
    const int mx = sx.total();  // sx = (l, 1, r)
    for (const auto& [sy, cy] : v.value.terms()) {
      if (sx.r != sy.l || sy.n < 1) continue;
      const int my = sy.total();
      const BoxShape sz{sx.l, sy.n - 1, sy.r};
      std::vector<Arc> glue;
      for (int h = 1; h <= sx.r; ++h)
        glue.push_back({sx.l + 1 + (sx.r - h + 1), h});
      glue.push_back({sx.l + 1, sy.l + 1});  // cap onto the leftmost top
      std::vector<int> keep_a(mx, 0), keep_b(my, 0);
      for (int p = 1; p <= sx.l; ++p) keep_a[p - 1] = p;
      for (int s = 1; s <= sy.n - 1; ++s)
        keep_b[sy.l + 1 + s - 1] = sx.l + s;
      for (int s = 1; s <= sy.r; ++s)
        keep_b[sy.l + sy.n + s - 1] = sx.l + sy.n - 1 + s;
      for (const auto& [ax, coef_x] : cx) {
        for (const auto& [ay, coef_y] : cy) {
          auto [arcs, loops] = glue_arcs(ax, mx, ay, my, glue, keep_a, keep_b);
          out.value.add_term(sz, arcs,
                             coef_x * coef_y * Scalar::delta().pow(loops));
        }
      }
    }
  }
  return out;
}

FockVector fock_apply(FockOp op, const GJSElement& x, const FockVector& v) {
  return op == FockOp::Create ? fock_create(x, v) : fock_annihilate(x, v);
}

GJSElement fock_inner(const FockVector& v, const FockVector& w) {
  return inner_product_B(v.value, w.value);
}

}  // namespace gjs
