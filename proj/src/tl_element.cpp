#include "gjs/tl_element.hpp"

namespace gjs {

namespace {
const Scalar kZeroScalar = Scalar(0);
}

void TLElement::check_shape(const TLDiagram& D) const {
  if (D.bottom_count() != bottom_ || D.top_count() != top_)
    throw shape_error("term shape " + std::to_string(D.bottom_count()) + "," +
                      std::to_string(D.top_count()) + " does not match element " +
                      std::to_string(bottom_) + "," + std::to_string(top_));
}

TLElement TLElement::from_diagram(const TLDiagram& D, const Scalar& c) {
  TLElement x(D.bottom_count(), D.top_count());
  x.add_term(D, c);
  return x;
}

TLElement TLElement::identity(int n) {
  return from_diagram(TLDiagram::identity(n));
}

TLElement TLElement::e_gen(int n, int i) {
  if (i < 1 || i >= n) throw shape_error("generator index out of range");
  ArcList arcs;
  arcs.emplace_back(i, i + 1);                    // bottom cap
  arcs.emplace_back(2 * n - i, 2 * n + 1 - i);    // top cup
  for (int x = 1; x <= n; ++x)
    if (x != i && x != i + 1) arcs.emplace_back(x, 2 * n + 1 - x);
  return from_diagram(TLDiagram(n, n, std::move(arcs)));
}

void TLElement::add_term(const TLDiagram& D, const Scalar& c) {
  if (c.is_zero()) return;
  check_shape(D);
  auto it = terms_.find(D);
  if (it == terms_.end()) {
    terms_.emplace(D, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Scalar& TLElement::coeff(const TLDiagram& D) const {
  auto it = terms_.find(D);
  return it == terms_.end() ? kZeroScalar : it->second;
}

TLElement TLElement::operator-() const {
  TLElement r(bottom_, top_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

TLElement TLElement::operator+(const TLElement& o) const {
  if (bottom_ != o.bottom_ || top_ != o.top_)
    throw shape_error("adding elements of different shapes");
  TLElement r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

TLElement TLElement::operator-(const TLElement& o) const { return *this + (-o); }

TLElement TLElement::operator*(const Scalar& c) const {
  TLElement r(bottom_, top_);
  if (c.is_zero()) return r;
  for (const auto& [d, k] : terms_) r.terms_.emplace(d, k * c);
  return r;
}

std::string TLElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) out += " + ";
    out += "(" + c.str() + ") * " + d.str();
    first = false;
  }
  return out;
}

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (x.bottom_count() != x.top_count() || y.bottom_count() != y.top_count())
    throw shape_error("tl_mul needs square elements");
  if (x.top_count() != y.bottom_count())
    throw shape_error("tl_mul: strand count mismatch");
  TLElement r(x.bottom_count(), y.top_count());
  Scalar delta = Scalar::delta();
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = compose(dx, dy);
      r.add_term(d, cx * cy * delta.pow(loops));
    }
  return r;
}

TLElement adjoint(const TLElement& x) {
  TLElement r(x.top_count(), x.bottom_count());
  for (const auto& [d, c] : x.terms()) r.add_term(adjoint(d), c);
  return r;
}

Scalar markov_trace(const TLElement& x, bool normalized) {
  if (x.bottom_count() != x.top_count())
    throw shape_error("trace of a non-square element");
  int n = x.bottom_count();
  std::vector<Arc> closure;
  closure.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) closure.emplace_back(i, 2 * n + 1 - i);
  std::vector<int> keep(static_cast<std::size_t>(2 * n), 0);
  Scalar delta = Scalar::delta();
  Scalar acc = Scalar(0);
  for (const auto& [d, c] : x.terms()) {
    auto [arcs, loops] = self_glue(d.arcs(), 2 * n, closure, keep);
    (void)arcs;
    acc += c * delta.pow(loops);
  }
  if (normalized) acc = acc * delta.pow(-n);
  return acc;
}

TLElement cond_expectation_tl(const TLElement& x) {
  if (x.bottom_count() != x.top_count())
    throw shape_error("conditional expectation of a non-square element");
  int n = x.bottom_count();
  if (n < 1) throw shape_error("conditional expectation needs n >= 1");
  // Glue bottom point n to the rightmost top point n+1; relabel the rest.
  std::vector<Arc> glue{{n, n + 1}};
  std::vector<int> keep(static_cast<std::size_t>(2 * n), 0);
  for (int p = 1; p < n; ++p) keep[static_cast<std::size_t>(p - 1)] = p;
  for (int p = n + 2; p <= 2 * n; ++p) keep[static_cast<std::size_t>(p - 1)] = p - 2;
  Scalar delta = Scalar::delta();
  TLElement r(n - 1, n - 1);
  for (const auto& [d, c] : x.terms()) {
    auto [arcs, loops] = self_glue(d.arcs(), 2 * n, glue, keep);
    r.add_term(TLDiagram(n - 1, n - 1, std::move(arcs)),
               c * delta.pow(loops - 1));
  }
  return r;
}

TLElement tensor_identity(const TLElement& x, int k) {
  if (k == 0) return x;
  TLDiagram idk = TLDiagram::identity(k);
  TLElement r(x.bottom_count() + k, x.top_count() + k);
  for (const auto& [d, c] : x.terms()) r.add_term(juxtapose(d, idk), c);
  return r;
}

TLElement jones_wenzl(int n, const DeltaSpec& spec) {
  if (n < 0) throw shape_error("jones_wenzl needs n >= 0");
  // Reject specializations where some [k], k <= n+1, vanishes.
  if (!spec.is_generic()) {
    for (int k = 1; k <= n + 1; ++k) {
      if (is_zero_at(quantum_integer(k), spec))
        throw pole_error("quantum integer [" + std::to_string(k) +
                         "] vanishes at the chosen delta");
    }
  }
  TLElement f = TLElement::identity(0);
  for (int k = 0; k < n; ++k) {
    // f is f_k on k strands; lift and recurse.
    TLElement fk1 = tensor_identity(f, 1);
    if (k == 0) {
      f = fk1;
      continue;
    }
    TLElement ek = TLElement::e_gen(k + 1, k);
    Scalar ratio = quantum_integer(k) / quantum_integer(k + 1);
    f = fk1 - tl_mul(tl_mul(fk1, ek), fk1) * ratio;
  }
  return f;
}

Scalar trace_pairing(const TLElement& x, const TLElement& y) {
  return markov_trace(tl_mul(adjoint(x), y));
}

}  // namespace gjs
