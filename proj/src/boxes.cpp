#include "gjs/boxes.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjs {

namespace {

void require_convention(const GJSElement& x, const GJSElement& y) {
  if (x.convention() != y.convention())
    throw std::invalid_argument(
        "cannot combine graded and filtered elements; apply phi first");
}

void require_graded(const GJSElement& x, const char* op) {
  if (x.convention() != GJSElement::Convention::Graded)
    throw std::invalid_argument(std::string(op) +
                                " expects the graded convention");
}

void require_filtered(const GJSElement& x, const char* op) {
  if (x.convention() != GJSElement::Convention::Filtered)
    throw std::invalid_argument(std::string(op) +
                                " expects the filtered convention");
}

// Gr_k means every shape is (k, n, k).
int common_side_count(const GJSElement& x, const char* op) {
  int k = -1;
  for (const auto& [shape, content] : x.terms()) {
    if (shape.l != shape.r)
      throw std::invalid_argument(std::string(op) +
                                  ": shape not of Gr_k form (l != r)");
    if (k == -1) k = shape.l;
    if (shape.l != k)
      throw std::invalid_argument(std::string(op) +
                                  ": terms live in different Gr_k");
  }
  return k;
}

}  // namespace

GJSElement GJSElement::box(Convention conv, const BoxShape& shape,
                           ArcList arcs, const Scalar& coeff) {
  GJSElement out(conv);
  out.add_term(shape, arcs, coeff);
  return out;
}

GJSElement GJSElement::unit(Convention conv, int k) {
  if (k < 0) throw std::invalid_argument("unit: negative strand count");
  ArcList arcs;
  for (int h = 1; h <= k; ++h) arcs.push_back({h, 2 * k + 1 - h});
  return box(conv, BoxShape{k, 0, k}, std::move(arcs));
}

std::size_t GJSElement::term_count() const {
  std::size_t n = 0;
  for (const auto& [shape, content] : terms_) n += content.size();
  return n;
}

void GJSElement::add_term(const BoxShape& shape, const ArcList& arcs,
                          const Scalar& c) {
  if (shape.l < 0 || shape.n < 0 || shape.r < 0)
    throw shape_error("box shape has a negative entry");
  if (shape.total() % 2 != 0)
    throw shape_error("box has an odd number of boundary points");
  if (!is_planar_matching(shape.total(), arcs))
    throw shape_error("box contents are not a non-crossing pairing");
  if (c.is_zero()) return;
  ArcList canon = arcs;
  for (auto& a : canon)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(canon.begin(), canon.end());
  Scalar& slot = terms_[shape][canon];
  slot = slot + c;
  if (slot.is_zero()) {
    terms_[shape].erase(canon);
    if (terms_[shape].empty()) terms_.erase(shape);
  }
}

Scalar GJSElement::coeff(const BoxShape& shape, const ArcList& arcs) const {
  auto it = terms_.find(shape);
  if (it == terms_.end()) return Scalar(0);
  ArcList canon = arcs;
  for (auto& a : canon)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(canon.begin(), canon.end());
  auto jt = it->second.find(canon);
  return jt == it->second.end() ? Scalar(0) : jt->second;
}

GJSElement GJSElement::operator-() const { return (*this) * Scalar(-1); }

GJSElement GJSElement::operator+(const GJSElement& o) const {
  require_convention(*this, o);
  GJSElement out = *this;
  for (const auto& [shape, content] : o.terms_)
    for (const auto& [arcs, c] : content) out.add_term(shape, arcs, c);
  return out;
}

GJSElement GJSElement::operator-(const GJSElement& o) const {
  return *this + (-o);
}

GJSElement GJSElement::operator*(const Scalar& c) const {
  GJSElement out(conv_);
  if (c.is_zero()) return out;
  for (const auto& [shape, content] : terms_)
    for (const auto& [arcs, coeff] : content)
      out.add_term(shape, arcs, coeff * c);
  return out;
}

std::string GJSElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first_shape = true;
  for (const auto& [shape, content] : terms_) {
    if (!first_shape) out += " + ";
    first_shape = false;
    out += "shape" + shape.str() + "{ ";
    bool first = true;
    for (const auto& [arcs, c] : content) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.str() + ") * " +
             TLDiagram(0, shape.total(), arcs).str();
    }
    out += " }";
  }
  return out;
}

GJSElement box_adjoint(const GJSElement& x) {
  GJSElement out(x.convention());
  for (const auto& [shape, content] : x.terms()) {
    const int m = shape.total();
    const BoxShape rshape{shape.r, shape.n, shape.l};
    for (const auto& [arcs, c] : content) {
      ArcList rarcs;
      for (const auto& a : arcs)
        rarcs.push_back({m + 1 - a.second, m + 1 - a.first});
      out.add_term(rshape, rarcs, c);
    }
  }
  return out;
}

GJSElement wedge(const GJSElement& x, const GJSElement& y) {
  require_convention(x, y);
  GJSElement out(x.convention());
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      if (sx.r != sy.l) continue;  // side strand counts must match
      const int mx = sx.total(), my = sy.total();
      const BoxShape sz{sx.l, sx.n + sy.n, sy.r};
      // Join x's right side (position l+n+(r-h+1) at height h) to y's left
      // side (position h at height h).
      std::vector<std::pair<int, int>> glue;
      for (int h = 1; h <= sx.r; ++h)
        glue.push_back({sx.l + sx.n + (sx.r - h + 1), h});
      std::vector<int> keep_a(mx, 0), keep_b(my, 0);
      for (int p = 1; p <= sx.l + sx.n; ++p) keep_a[p - 1] = p;
      for (int q = sy.l + 1; q <= my; ++q)
        keep_b[q - 1] = sx.l + sx.n + (q - sy.l);
      for (const auto& [ax, coef_x] : cx) {
        for (const auto& [ay, coef_y] : cy) {
          auto [arcs, loops] = glue_arcs(ax, mx, ay, my, glue, keep_a, keep_b);
          out.add_term(sz, arcs, coef_x * coef_y * Scalar::delta().pow(loops));
        }
      }
    }
  }
  return out;
}

GJSElement graded_mul(const GJSElement& x, const GJSElement& y, int k) {
  require_graded(x, "graded_mul");
  require_graded(y, "graded_mul");
  const int kx = common_side_count(x, "graded_mul");
  const int ky = common_side_count(y, "graded_mul");
  if ((kx != -1 && kx != k) || (ky != -1 && ky != k))
    throw std::invalid_argument("graded_mul: factor not in Gr_k");
  return wedge(x, y);
}

namespace {

// Sum over all TL cappings of the n top strings, with the l = r side strings
// closed around (left height h to right height h); every point is glued, so
// each term contributes delta^{loops}.
Scalar closure_sum(const BoxShape& shape,
                   const std::map<ArcList, Scalar>& content) {
  const int m = shape.total();
  Scalar total = Scalar::zero();
  const auto cappings = enumerate_pairings(shape.n);
  std::vector<int> keep(m, 0);
  for (const auto& top : cappings) {
    std::vector<std::pair<int, int>> glue;
    for (int h = 1; h <= shape.l; ++h) glue.push_back({h, m + 1 - h});
    for (const auto& a : top.arcs())
      glue.push_back({shape.l + a.first, shape.l + a.second});
    for (const auto& [arcs, c] : content) {
      auto [rest, loops] = self_glue(arcs, m, glue, keep);
      (void)rest;
      total = total + c * Scalar::delta().pow(loops);
    }
  }
  return total;
}

}  // namespace

Scalar voiculescu_trace(const GJSElement& x, int k) {
  require_graded(x, "voiculescu_trace");
  for (const auto& [shape, content] : x.terms())
    if (shape.l != k || shape.r != k)
      throw std::invalid_argument("voiculescu_trace: term not in Gr_k");
  Scalar total = Scalar::zero();
  for (const auto& [shape, content] : x.terms())
    total = total + closure_sum(shape, content);
  return total * Scalar::delta().pow(-k);
}

Scalar tau_infty(const GJSElement& x) {
  require_graded(x, "tau_infty");
  Scalar total = Scalar::zero();
  for (const auto& [shape, content] : x.terms()) {
    if (shape.l != shape.r) continue;
    total = total + closure_sum(shape, content);
  }
  return total;
}

GJSElement filtered_mul(const GJSElement& x, const GJSElement& y) {
  require_filtered(x, "filtered_mul");
  require_filtered(y, "filtered_mul");
  GJSElement out(x.convention());
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      if (sx.r != sy.l) continue;
      const int mx = sx.total(), my = sy.total();
      const int jmax = std::min(sx.n, sy.n);
      for (int j = 0; j <= jmax; ++j) {
        const BoxShape sz{sx.l, sx.n + sy.n - 2 * j, sy.r};
        std::vector<std::pair<int, int>> glue;
        for (int h = 1; h <= sx.r; ++h)
          glue.push_back({sx.l + sx.n + (sx.r - h + 1), h});
        // Cap the j adjacent top strings: x's rightmost tops meet y's
        // leftmost tops, innermost pair first.
        for (int i = 1; i <= j; ++i)
          glue.push_back({sx.l + sx.n - i + 1, sy.l + i});
        std::vector<int> keep_a(mx, 0), keep_b(my, 0);
        for (int p = 1; p <= sx.l + sx.n - j; ++p) keep_a[p - 1] = p;
        for (int s = 1; s <= sy.n - j; ++s)
          keep_b[sy.l + j + s - 1] = sx.l + sx.n - j + s;
        for (int s = 1; s <= sy.r; ++s)
          keep_b[sy.l + sy.n + s - 1] = sx.l + sx.n + sy.n - 2 * j + s;
        for (const auto& [ax, coef_x] : cx) {
          for (const auto& [ay, coef_y] : cy) {
            auto [arcs, loops] =
                glue_arcs(ax, mx, ay, my, glue, keep_a, keep_b);
            out.add_term(sz, arcs,
                         coef_x * coef_y * Scalar::delta().pow(loops));
          }
        }
      }
    }
  }
  return out;
}

Scalar filtered_trace(const GJSElement& x) {
  require_filtered(x, "filtered_trace");
  Scalar total = Scalar::zero();
  for (const auto& [shape, content] : x.terms()) {
    if (shape.n != 0 || shape.l != shape.r) continue;
    const int m = shape.total();
    std::vector<std::pair<int, int>> glue;
    for (int h = 1; h <= shape.l; ++h) glue.push_back({h, m + 1 - h});
    std::vector<int> keep(m, 0);
    for (const auto& [arcs, c] : content) {
      auto [rest, loops] = self_glue(arcs, m, glue, keep);
      (void)rest;
      total = total + c * Scalar::delta().pow(loops);
    }
  }
  return total;
}

GJSElement phi(const GJSElement& x) {
  require_graded(x, "phi");
  GJSElement out(GJSElement::Convention::Filtered);
  for (const auto& [shape, content] : x.terms()) {
    const int m = shape.total();
    for (const auto& epi : enumerate_epi(shape.n)) {
      const int t = epi.top_count();
      const BoxShape sz{shape.l, t, shape.r};
      // Glue the stacked diagram's bottom point k onto top string k of the
      // box; its top point n+y (y-th from the right) becomes the new top
      // string at horizontal position t-y+1.
      std::vector<std::pair<int, int>> glue;
      for (int k = 1; k <= shape.n; ++k) glue.push_back({shape.l + k, k});
      std::vector<int> keep_a(m, 0), keep_b(shape.n + t, 0);
      for (int p = 1; p <= shape.l; ++p) keep_a[p - 1] = p;
      for (int p = shape.l + shape.n + 1; p <= m; ++p)
        keep_a[p - 1] = p - shape.n + t;
      for (int y = 1; y <= t; ++y)
        keep_b[shape.n + y - 1] = shape.l + t - y + 1;
      for (const auto& [arcs, c] : content) {
        auto [res, loops] = glue_arcs(arcs, m, epi.arcs(), shape.n + t, glue,
                                      keep_a, keep_b);
        out.add_term(sz, res, c * Scalar::delta().pow(loops));
      }
    }
  }
  return out;
}

GJSElement jones_projection(int k) {
  if (k < 1) throw std::invalid_argument("jones_projection: k must be >= 1");
  const int m = 2 * k + 2;
  ArcList arcs{{1, 2}, {m - 1, m}};
  for (int h = 3; h <= k + 1; ++h) arcs.push_back({h, m + 1 - h});
  return GJSElement::box(GJSElement::Convention::Graded,
                         BoxShape{k + 1, 0, k + 1}, std::move(arcs),
                         Scalar::delta().pow(-1));
}

GJSElement cond_expectation(const GJSElement& x) {
  require_graded(x, "cond_expectation");
  const int k1 = common_side_count(x, "cond_expectation");
  if (k1 < 1)
    throw std::invalid_argument(
        "cond_expectation: needs at least one side strand");
  GJSElement out(x.convention());
  for (const auto& [shape, content] : x.terms()) {
    const int m = shape.total();
    const BoxShape sz{shape.l - 1, shape.n, shape.r - 1};
    std::vector<std::pair<int, int>> glue{{1, m}};
    std::vector<int> keep(m, 0);
    for (int p = 2; p <= m - 1; ++p) keep[p - 1] = p - 1;
    for (const auto& [arcs, c] : content) {
      auto [res, loops] = self_glue(arcs, m, glue, keep);
      out.add_term(sz, res, c * Scalar::delta().pow(loops - 1));
    }
  }
  return out;
}

GJSElement include_up(const GJSElement& x) {
  require_graded(x, "include_up");
  common_side_count(x, "include_up");
  GJSElement out(x.convention());
  for (const auto& [shape, content] : x.terms()) {
    const int m = shape.total();
    const BoxShape sz{shape.l + 1, shape.n, shape.r + 1};
    for (const auto& [arcs, c] : content) {
      ArcList res{{1, m + 2}};
      for (const auto& a : arcs)
        res.push_back({a.first + 1, a.second + 1});
      out.add_term(sz, res, c);
    }
  }
  return out;
}

GJSElement compress(const GJSElement& x, int k) {
  require_filtered(x, "compress");
  GJSElement out(x.convention());
  for (const auto& [shape, content] : x.terms()) {
    if (shape.l != k || shape.r != k) continue;
    for (const auto& [arcs, c] : content) out.add_term(shape, arcs, c);
  }
  return out;
}

bool check_pulldown(const GJSElement& x, int k) {
  require_graded(x, "check_pulldown");
  const GJSElement ek = jones_projection(k);
  const GJSElement lhs = graded_mul(x, ek, k + 1);
  const GJSElement rhs =
      graded_mul(include_up(cond_expectation(lhs)), ek, k + 1) *
      Scalar::delta().pow(2);
  return lhs == rhs;
}

GJSElement inner_product_B(const GJSElement& x, const GJSElement& y) {
  const GJSElement xs = box_adjoint(x);
  // <x|y> = the left sides and all top strings of x† and y glued; with x
  // reflected, x†'s *right* side and top meet y's left side and top.
  GJSElement out(y.convention());
  for (const auto& [sx, cx] : xs.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      if (sx.r != sy.l || sx.n != sy.n) continue;
      const int mx = sx.total(), my = sy.total();
      const BoxShape sz{sx.l, 0, sy.r};
      std::vector<std::pair<int, int>> glue;
      for (int h = 1; h <= sx.r; ++h)
        glue.push_back({sx.l + sx.n + (sx.r - h + 1), h});
      for (int i = 1; i <= sx.n; ++i)
        glue.push_back({sx.l + sx.n - i + 1, sy.l + i});
      std::vector<int> keep_a(mx, 0), keep_b(my, 0);
      for (int p = 1; p <= sx.l; ++p) keep_a[p - 1] = p;
      for (int s = 1; s <= sy.r; ++s)
        keep_b[sy.l + sy.n + s - 1] = sx.l + s;
      for (const auto& [ax, coef_x] : cx) {
        for (const auto& [ay, coef_y] : cy) {
          auto [arcs, loops] = glue_arcs(ax, mx, ay, my, glue, keep_a, keep_b);
          out.add_term(sz, arcs, coef_x * coef_y * Scalar::delta().pow(loops));
        }
      }
    }
  }
  return out;
}

std::vector<ArcList> all_box_contents(int m) {
  std::vector<ArcList> out;
  for (const auto& d : enumerate_pairings(m)) out.push_back(d.arcs());
  return out;
}

std::vector<BoxShape> all_shapes_total(int s) {
  std::vector<BoxShape> out;
  for (int l = 0; l <= s; ++l)
    for (int n = 0; n + l <= s; ++n) out.push_back(BoxShape{l, n, s - l - n});
  return out;
}

}  // namespace gjs
