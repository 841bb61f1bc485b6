// gjscalc: command-line front end for the exact TL/GJS engine and the
// principal-graph analyzer. Exit codes: 0 success, 1 failed mathematical
// check, 2 input error.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gjs/boxes.hpp"
#include "gjs/diagram.hpp"
#include "gjs/fock.hpp"
#include "gjs/freeprob.hpp"
#include "gjs/graph.hpp"
#include "gjs/quasibasis.hpp"
#include "gjs/scalar.hpp"
#include "gjs/tl_element.hpp"

namespace {

int g_exit = 0;  // raised to 1 by failed checks

void check_failed() { g_exit = std::max(g_exit, 1); }

// ---------------------------------------------------------------- tl trace

// Tiny expression grammar over one TL algebra:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' INT)?
//   atom   := eINT | jw '(' INT ')' | id | d | INT | '(' expr ')'
struct ElementExpr {
  explicit ElementExpr(const std::string& text) : text_(text) {}

  // Largest strand count any atom needs (generators need index+1).
  int required_strands() {
    pos_ = 0;
    int needed = 1;
    while (pos_ < text_.size()) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == 'e' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        needed = std::max(needed, read_int() + 1);
      } else if (text_.compare(pos_, 2, "jw") == 0) {
        pos_ += 2;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') ++pos_;
        needed = std::max(needed, read_int());
      } else {
        ++pos_;
      }
    }
    return needed;
  }

  gjs::TLElement parse(int strands) {
    strands_ = strands;
    pos_ = 0;
    Value v = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw gjs::parse_error("unexpected trailing input", pos_);
    return to_element(v);
  }

 private:
  struct Value {
    bool is_scalar = true;
    gjs::Scalar s;
    gjs::TLElement el{0, 0};
  };

  gjs::TLElement to_element(const Value& v) {
    if (!v.is_scalar) return v.el;
    return gjs::TLElement::identity(strands_) * v.s;
  }

  Value parse_expr() {
    Value acc = parse_term();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        const char op = text_[pos_++];
        Value rhs = parse_term();
        if (acc.is_scalar && rhs.is_scalar) {
          acc.s = op == '+' ? acc.s + rhs.s : acc.s - rhs.s;
        } else {
          gjs::TLElement l = to_element(acc), r = to_element(rhs);
          acc.is_scalar = false;
          acc.el = op == '+' ? l + r : l - r;
        }
      } else {
        return acc;
      }
    }
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        Value rhs = parse_factor();
        acc = multiply(acc, rhs);
      } else {
        return acc;
      }
    }
  }

  Value multiply(const Value& a, const Value& b) {
    Value out;
    if (a.is_scalar && b.is_scalar) {
      out.s = a.s * b.s;
      return out;
    }
    out.is_scalar = false;
    if (a.is_scalar) {
      out.el = b.el * a.s;
    } else if (b.is_scalar) {
      out.el = a.el * b.s;
    } else {
      out.el = gjs::tl_mul(a.el, b.el);
    }
    return out;
  }

  Value parse_factor() {
    Value base = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const int e = read_int();
      if (base.is_scalar) {
        base.s = base.s.pow(e);
      } else {
        gjs::TLElement acc = gjs::TLElement::identity(strands_);
        for (int i = 0; i < e; ++i) acc = gjs::tl_mul(acc, base.el);
        base.el = acc;
      }
    }
    return base;
  }

  Value parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw gjs::parse_error("expected an operand", pos_);
    Value out;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      out = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw gjs::parse_error("expected )", pos_);
      ++pos_;
      return out;
    }
    if (c == 'e' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const int i = read_int();
      if (i < 1 || i > strands_ - 1)
        throw gjs::parse_error("generator index out of range", pos_);
      out.is_scalar = false;
      out.el = gjs::TLElement::e_gen(strands_, i);
      return out;
    }
    if (text_.compare(pos_, 2, "jw") == 0) {
      pos_ += 2;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '(')
        throw gjs::parse_error("expected ( after jw", pos_);
      ++pos_;
      const int k = read_int();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw gjs::parse_error("expected )", pos_);
      ++pos_;
      if (k < 0 || k > strands_)
        throw gjs::parse_error("jw argument out of range", pos_);
      out.is_scalar = false;
      out.el = gjs::tensor_identity(gjs::jones_wenzl(k), strands_ - k);
      return out;
    }
    if (text_.compare(pos_, 2, "id") == 0) {
      pos_ += 2;
      out.is_scalar = false;
      out.el = gjs::TLElement::identity(strands_);
      return out;
    }
    if (c == 'd') {
      ++pos_;
      out.s = gjs::Scalar::delta();
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.s = gjs::Scalar(static_cast<long>(read_int()));
      return out;
    }
    throw gjs::parse_error(std::string("unexpected character `") + c + "`",
                           pos_);
  }

  int read_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw gjs::parse_error("expected an integer", pos_);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string text_;
  std::size_t pos_ = 0;
  int strands_ = 0;
};

// ---------------------------------------------------------------- gjs check

using gjs::BoxShape;
using gjs::GJSElement;

struct EnumeratedBox {
  BoxShape shape;
  gjs::ArcList arcs;
};

std::vector<EnumeratedBox> boxes_up_to(int max_points) {
  std::vector<EnumeratedBox> out;
  for (int m = 0; m <= max_points; m += 2)
    for (const auto& shape : gjs::all_shapes_total(m))
      for (const auto& arcs : gjs::all_box_contents(m))
        out.push_back({shape, arcs});
  return out;
}

int run_check_phi(int max_points) {
  const auto boxes = boxes_up_to(max_points);
  long pairs = 0, traces = 0;
  for (const auto& x : boxes) {
    const GJSElement gx =
        GJSElement::box(GJSElement::Convention::Graded, x.shape, x.arcs);
    if (x.shape.l == x.shape.r) {
      ++traces;
      const gjs::Scalar lhs = gjs::tau_infty(gx);
      const gjs::Scalar rhs = gjs::filtered_trace(gjs::phi(gx));
      if (lhs != rhs) {
        std::cout << "FAIL: trace mismatch on " << gx.str() << "\n";
        std::cout << "  tau_infty = " << lhs.str() << "\n";
        std::cout << "  Tr(phi(x)) = " << rhs.str() << "\n";
        check_failed();
        return g_exit;
      }
    }
    for (const auto& y : boxes) {
      if (x.shape.total() + y.shape.total() > max_points) continue;
      if (x.shape.r != y.shape.l) continue;
      const GJSElement gy =
          GJSElement::box(GJSElement::Convention::Graded, y.shape, y.arcs);
      ++pairs;
      const GJSElement lhs = gjs::phi(gjs::wedge(gx, gy));
      const GJSElement rhs = gjs::filtered_mul(gjs::phi(gx), gjs::phi(gy));
      if (lhs != rhs) {
        std::cout << "FAIL: phi is not multiplicative on\n";
        std::cout << "  x = " << gx.str() << "\n";
        std::cout << "  y = " << gy.str() << "\n";
        std::cout << "  phi(x^y) = " << lhs.str() << "\n";
        std::cout << "  phi(x).phi(y) = " << rhs.str() << "\n";
        check_failed();
        return g_exit;
      }
    }
  }
  std::cout << "OK: 100% pairs exact (" << pairs << " wedge pairs, " << traces
            << " trace boxes, max points " << max_points << ")\n";
  return g_exit;
}

int run_check_pulldown(int k) {
  long count = 0;
  for (int n = 0; n <= 2; ++n) {
    const BoxShape shape{k + 1, n, k + 1};
    for (const auto& arcs : gjs::all_box_contents(shape.total())) {
      const GJSElement x =
          GJSElement::box(GJSElement::Convention::Graded, shape, arcs);
      ++count;
      if (!gjs::check_pulldown(x, k)) {
        std::cout << "FAIL: pull-down identity fails for k=" << k << " on\n";
        std::cout << "  x = " << x.str() << "\n";
        check_failed();
        return g_exit;
      }
    }
  }
  std::cout << "OK: pull-down identity x e_" << k << " = delta^2 E(x e_" << k
            << ") e_" << k << " holds on " << count << " spanning boxes\n";
  return g_exit;
}

int run_check_tracial(int max_points) {
  long pairs = 0, expectations = 0;
  const auto boxes = boxes_up_to(max_points);
  for (const auto& x : boxes) {
    if (x.shape.l != x.shape.r) continue;
    const int k = x.shape.l;
    const GJSElement gx =
        GJSElement::box(GJSElement::Convention::Graded, x.shape, x.arcs);
    for (const auto& y : boxes) {
      if (y.shape.l != k || y.shape.r != k) continue;
      if (x.shape.total() + y.shape.total() > max_points) continue;
      const GJSElement gy =
          GJSElement::box(GJSElement::Convention::Graded, y.shape, y.arcs);
      ++pairs;
      const gjs::Scalar lhs = gjs::voiculescu_trace(gjs::graded_mul(gx, gy, k), k);
      const gjs::Scalar rhs = gjs::voiculescu_trace(gjs::graded_mul(gy, gx, k), k);
      if (lhs != rhs) {
        std::cout << "FAIL: trace is not tracial on\n";
        std::cout << "  x = " << gx.str() << "\n  y = " << gy.str() << "\n";
        std::cout << "  tau(xy) = " << lhs.str() << "\n  tau(yx) = "
                  << rhs.str() << "\n";
        check_failed();
        return g_exit;
      }
    }
    // Expectation compatibility: tau_k(E(x)) = tau_{k+1}(x) on Gr_{k+1}.
    if (k >= 1) {
      ++expectations;
      const gjs::Scalar lhs =
          gjs::voiculescu_trace(gjs::cond_expectation(gx), k - 1);
      const gjs::Scalar rhs = gjs::voiculescu_trace(gx, k);
      if (lhs != rhs) {
        std::cout << "FAIL: expectation is not trace-preserving on\n";
        std::cout << "  x = " << gx.str() << "\n";
        check_failed();
        return g_exit;
      }
    }
  }
  std::cout << "OK: 100% pairs exact (" << pairs << " commuted pairs, "
            << expectations << " expectation boxes, max points " << max_points
            << ")\n";
  return g_exit;
}

int run_quasi_basis(int n) {
  const gjs::QuasiBasis qb = gjs::quasi_basis(n);
  std::cout << "inclusion: TL_" << 2 * (n - 1) << " inside TL_" << 2 * n
            << " (two-strand conditional expectation)\n";
  std::cout << "basis size = " << qb.u.size() << "\n";
  long failures = 0;
  for (const auto& d : gjs::enumerate_pairings(4 * n)) {
    const gjs::TLElement x = gjs::TLElement::from_diagram(
        gjs::TLDiagram(2 * n, 2 * n, d.arcs()));
    if (!gjs::reconstructs(qb, x)) {
      ++failures;
      std::cout << "FAIL: reconstruction misses " << x.str() << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "reconstruction: OK on all " << qb.u.size()
              << "-generator expansions of the diagram basis\n";
  } else {
    check_failed();
    return g_exit;
  }
  const gjs::TLElement index = gjs::index_element(qb);
  std::cout << "index element = " << index.str() << "\n";
  const gjs::TLElement expected =
      gjs::TLElement::identity(2 * n) * gjs::Scalar::delta().pow(2);
  if (index == expected) {
    std::cout << "index equals delta^2 * 1: yes\n";
  } else {
    std::cout << "index equals delta^2 * 1: no (the Watatani index of this "
                 "inclusion is not scalar at generic delta)\n";
  }
  return g_exit;
}

// ---------------------------------------------------------------- graph

struct GraphOptions {
  std::string file;
  std::string tl_spec;
  int cutoff = 4;
  double tolerance = 1e-9;
};

gjs::WeightedGraph load_graph(const GraphOptions& opt) {
  if (!opt.file.empty() && !opt.tl_spec.empty())
    throw std::invalid_argument("pass either --graph or --tl, not both");
  if (!opt.file.empty()) return gjs::WeightedGraph::parse_file(opt.file);
  if (!opt.tl_spec.empty())
    return gjs::tl_principal_graph(gjs::DeltaSpec::parse(opt.tl_spec),
                                   opt.cutoff, opt.tolerance);
  throw std::invalid_argument("pass --graph FILE or --tl SPEC");
}

void print_graph_weights(const gjs::WeightedGraph& g) {
  std::cout << "delta = " << g.delta().str();
  if (const auto v = g.delta_value()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", *v);
    std::cout << " (= " << buf << ")";
  }
  std::cout << "\n";
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& vert = g.vertex(i);
    std::cout << "mu(" << vert.name << ") = ";
    if (vert.weight_sym.has_value()) {
      std::cout << vert.weight_sym->str();
      if (vert.weight_num.has_value()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", *vert.weight_num);
        std::cout << " (= " << buf << ")";
      }
    } else if (vert.weight_num.has_value()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.12g", *vert.weight_num);
      std::cout << buf;
    } else {
      std::cout << "?";
    }
    if (vert.provisional) std::cout << "  [provisional: truncation boundary]";
    std::cout << "\n";
  }
}

int run_graph_fp(const GraphOptions& opt) {
  gjs::WeightedGraph g = load_graph(opt);
  if (!g.all_weights_numeric() && !g.all_weights_symbolic()) {
    std::cout << "mode = solve+verify\n";
    g = gjs::fp_solve(g);
  } else {
    std::cout << "mode = verify\n";
  }
  print_graph_weights(g);
  const gjs::FPReport report = gjs::fp_verify(g, opt.tolerance);
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
  if (report.ok) {
    if (report.exact)
      std::cout << "verify = OK (exact)\n";
    else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.3g", report.max_residual);
      std::cout << "verify = OK (max residual " << buf << ")\n";
    }
  } else {
    std::cout << "verify = FAIL\n";
    check_failed();
  }
  return g_exit;
}

int run_graph_k0(const GraphOptions& opt, int k) {
  const gjs::WeightedGraph g = load_graph(opt);
  std::cout << "K0(A_0) = Z^" << g.vertex_count() << "  (KTheory)\n";
  const gjs::K0Class cls = gjs::identity_class(g, k);
  std::cout << "[1_" << k << "] = " << gjs::format_class(g, cls) << "\n";
  for (const auto& [v, c] : cls)
    if (g.vertex(v).provisional)
      std::cout << "note: class touches the truncation boundary vertex "
                << g.vertex(v).name << " (provisional)\n";
  const gjs::TraceValue trace = gjs::class_trace(g, cls);
  std::cout << "trace = " << trace.str() << "\n";
  return g_exit;
}

int run_graph_report(const GraphOptions& opt) {
  const gjs::WeightedGraph g = load_graph(opt);
  std::cout << "vertices = " << g.vertex_count()
            << ", edges = " << g.edges().size() << "\n";
  print_graph_weights(g);
  std::cout << "depth = " << gjs::graph_depth(g) << "\n";
  const gjs::FPReport fp = gjs::fp_verify(g, opt.tolerance);
  std::cout << "fp verify = " << (fp.ok ? "OK" : "FAIL")
            << (fp.exact ? " (exact)" : "") << "\n";
  if (!fp.ok) check_failed();
  for (const auto& note : fp.notes) std::cout << "note: " << note << "\n";
  const gjs::SimplicityReport simplicity = gjs::simplicity_report(g);
  for (const auto& line : simplicity.lines) std::cout << line << "\n";
  std::cout << "K0(A_0) = Z^" << g.vertex_count() << "  (KTheory)\n";
  const gjs::ProjectionlessVerdict pl =
      gjs::projectionless_verdict(g, opt.tolerance);
  std::cout << "projectionless = " << (pl.projectionless ? "yes" : "no")
            << " (" << pl.note << ")\n";
  if (g.delta_value().has_value() && *g.delta_value() > 1.0) {
    std::cout << "N(delta^2) = " << gjs::pp_bound(g.delta(), opt.tolerance)
              << "  (PPSize)\n";
  }
  std::cout << "obstruction:\n" << gjs::crossed_product_obstruction(g, opt.tolerance);
  return g_exit;
}

int run_graph_pp_bound(const GraphOptions& opt) {
  gjs::DeltaSpec spec = gjs::DeltaSpec::generic();
  if (!opt.tl_spec.empty()) {
    spec = gjs::DeltaSpec::parse(opt.tl_spec);
  } else {
    spec = load_graph(opt).delta();
  }
  std::cout << "N(delta^2) = " << gjs::pp_bound(spec, opt.tolerance) << "\n";
  return g_exit;
}

int run_graph_obstruction(const GraphOptions& opt) {
  const gjs::WeightedGraph g = load_graph(opt);
  std::cout << gjs::crossed_product_obstruction(g, opt.tolerance);
  return g_exit;
}

int run_graph_blocks(const GraphOptions& opt) {
  const gjs::WeightedGraph g = load_graph(opt);
  const auto blocks = gjs::block_descriptors(g, opt.tolerance);
  for (const auto& b : blocks) std::cout << b.describe(g) << "\n";
  if (blocks.empty()) std::cout << "no edges\n";
  return g_exit;
}

int run_graph_scale(const GraphOptions& opt, const std::string& class_text) {
  const gjs::WeightedGraph g = load_graph(opt);
  const gjs::K0Class cls = gjs::parse_class(g, class_text);
  std::cout << "class = " << gjs::format_class(g, cls) << "\n";
  const gjs::ScaleVerdict verdict =
      gjs::cone_scale_verdict(g, cls, opt.tolerance);
  std::cout << "trace = " << verdict.trace.str() << "\n";
  std::cout << "positive = " << (verdict.positive ? "yes" : "no")
            << "  (SimpleTrace positive cone)\n";
  std::cout << "in scale = " << (verdict.in_scale ? "yes" : "no")
            << "  (scale)\n";
  std::cout << "note: " << verdict.note << "\n";
  return g_exit;
}

// ---------------------------------------------------------------- moments

gjs::Scalar parse_scalar_or_number(const std::string& text) {
  try {
    return gjs::Scalar::parse(text);
  } catch (const gjs::parse_error&) {
    return gjs::Scalar(gjs::Rat(std::stod(text)));
  }
}

int run_moments_cup(int n) {
  for (int k = 1; k <= n; ++k) {
    const gjs::Scalar m = gjs::cup_moment(k);
    std::cout << "m_" << k << " = " << m.str() << "\n";
    const gjs::Scalar expected =
        gjs::mp_moment({gjs::Scalar::delta(), gjs::Scalar::one()}, k);
    if (m != expected) {
      std::cout << "FAIL: cup moment differs from the free-Poisson value "
                << expected.str() << "\n";
      check_failed();
      return g_exit;
    }
  }
  std::cout << "matches free-Poisson(rate d, jump 1) exactly\n";
  return g_exit;
}

int run_moments_mp(const std::string& rate_text, const std::string& jump_text,
                   int n) {
  const gjs::MPLaw law{parse_scalar_or_number(rate_text),
                       parse_scalar_or_number(jump_text)};
  for (int k = 1; k <= n; ++k)
    std::cout << "m_" << k << " = " << gjs::mp_moment(law, k).str() << "\n";
  // Numeric support data when the parameters are constants.
  if (law.rate.den().degree() == 0 && law.rate.num().degree() <= 0 &&
      law.jump.den().degree() == 0 && law.jump.num().degree() <= 0) {
    const double rate = law.rate.num().eval(0.0) / law.rate.den().eval(0.0);
    const double jump = law.jump.num().eval(0.0) / law.jump.den().eval(0.0);
    const gjs::MPSupport support = gjs::mp_support(rate, jump);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "atom = %.12g, support = [%.12g, %.12g], invertible = %s",
                  support.atom_mass, support.support_min, support.support_max,
                  support.invertible ? "yes" : "no");
    std::cout << buf << "\n";
  }
  return g_exit;
}

int run_moments_edge_law(double alpha, double beta, bool loop, double tol) {
  std::cout << gjs::edge_law_report(alpha, beta, loop, tol);
  return g_exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Temperley-Lieb / GJS calculator and principal-graph "
               "analyzer"};
  app.require_subcommand(1);
  double tolerance = 1e-9;
  app.add_option("--tolerance", tolerance,
                 "numeric tolerance for floating-point checks")
      ->capture_default_str();

  // ---- tl ----
  auto* tl = app.add_subcommand("tl", "Temperley-Lieb diagram algebra");
  tl->require_subcommand(1);

  auto* tl_dim = tl->add_subcommand("dim", "count pairings of N points");
  int tl_dim_n = 0;
  tl_dim->add_option("N", tl_dim_n, "number of boundary points (even)")
      ->required();
  tl_dim->callback([&] {
    if (tl_dim_n < 0 || tl_dim_n % 2 != 0)
      throw std::invalid_argument("point count must be even and >= 0");
    const auto pairings = gjs::enumerate_pairings(tl_dim_n);
    std::cout << "catalan(" << tl_dim_n / 2 << ") = " << pairings.size()
              << "\n";
  });

  auto* tl_jw = tl->add_subcommand("jw", "Jones-Wenzl projection");
  int tl_jw_n = 0;
  std::string tl_jw_delta = "generic";
  tl_jw->add_option("N", tl_jw_n, "strand count")->required();
  tl_jw->add_option("--delta", tl_jw_delta, "modulus (generic|cos:M|NUMBER)")
      ->capture_default_str();
  tl_jw->callback([&] {
    const gjs::DeltaSpec spec = gjs::DeltaSpec::parse(tl_jw_delta);
    const gjs::TLElement f = gjs::jones_wenzl(tl_jw_n, spec);
    std::cout << "jw(" << tl_jw_n << ") = " << f.str() << "\n";
    std::cout << "Tr(jw(" << tl_jw_n << ")) = "
              << gjs::markov_trace(f).str() << " = [" << tl_jw_n + 1 << "]\n";
  });

  auto* tl_trace = tl->add_subcommand("trace", "Markov trace of an expression");
  std::string tl_trace_expr;
  int tl_trace_strands = 0;
  bool tl_trace_normalized = false;
  tl_trace->add_option("EXPR", tl_trace_expr,
                       "expression in e1..e(N-1), jw(k), id, d, integers")
      ->required();
  tl_trace->add_option("--strands", tl_trace_strands,
                       "strand count (default: inferred)");
  tl_trace->add_flag("--normalized", tl_trace_normalized,
                     "divide by delta^N");
  tl_trace->callback([&] {
    ElementExpr expr(tl_trace_expr);
    const int needed = expr.required_strands();
    const int strands = tl_trace_strands > 0 ? tl_trace_strands : needed;
    if (strands < needed)
      throw std::invalid_argument("--strands is too small for the expression");
    const gjs::TLElement x = expr.parse(strands);
    std::cout << "trace = "
              << gjs::markov_trace(x, tl_trace_normalized).str() << "\n";
  });

  // ---- gjs ----
  auto* gjs_cmd = app.add_subcommand("gjs", "graded/filtered GJS checks");
  gjs_cmd->require_subcommand(1);

  auto* gjs_check = gjs_cmd->add_subcommand("check", "verify an identity");
  gjs_check->require_subcommand(1);

  auto* check_phi = gjs_check->add_subcommand(
      "phi", "phi is a trace-preserving homomorphism");
  int phi_points = 6;
  check_phi->add_option("--max-points", phi_points,
                        "combined boundary-point budget")
      ->capture_default_str();
  check_phi->callback([&] { run_check_phi(phi_points); });

  auto* check_pulldown =
      gjs_check->add_subcommand("pulldown", "pull-down identity for e_k");
  int pulldown_k = 1;
  check_pulldown->add_option("--k", pulldown_k, "Jones projection index")
      ->capture_default_str();
  check_pulldown->callback([&] { run_check_pulldown(pulldown_k); });

  auto* check_tracial =
      gjs_check->add_subcommand("tracial", "trace and expectation identities");
  int tracial_points = 6;
  check_tracial->add_option("--max-points", tracial_points,
                            "combined boundary-point budget")
      ->capture_default_str();
  check_tracial->callback([&] { run_check_tracial(tracial_points); });

  auto* gjs_qb = gjs_cmd->add_subcommand(
      "quasi-basis", "module basis with reconstruction identity");
  int qb_n = 1;
  gjs_qb->add_option("--n", qb_n, "inclusion TL_{2(n-1)} in TL_{2n}")
      ->capture_default_str();
  gjs_qb->callback([&] { run_quasi_basis(qb_n); });

  // ---- moments ----
  auto* moments = app.add_subcommand("moments", "free-probability moments");
  moments->require_subcommand(1);

  auto* moments_cup = moments->add_subcommand("cup", "TL cup moments");
  int cup_n = 4;
  moments_cup->add_option("--n", cup_n, "highest moment")->capture_default_str();
  moments_cup->callback([&] { run_moments_cup(cup_n); });

  auto* moments_mp =
      moments->add_subcommand("mp", "free Poisson (Marchenko-Pastur) moments");
  std::string mp_rate = "1", mp_jump = "1";
  int mp_n = 4;
  moments_mp->add_option("--rate", mp_rate, "rate lambda (number or d-expression)")
      ->capture_default_str();
  moments_mp->add_option("--jump", mp_jump, "jump alpha")->capture_default_str();
  moments_mp->add_option("--n", mp_n, "highest moment")->capture_default_str();
  moments_mp->callback([&] { run_moments_mp(mp_rate, mp_jump, mp_n); });

  auto* moments_edge =
      moments->add_subcommand("edge-law", "corner laws of an edge element");
  double edge_alpha = 1.0, edge_beta = 1.0;
  bool edge_loop = false;
  moments_edge->add_option("--alpha", edge_alpha, "weight of one endpoint")
      ->capture_default_str();
  moments_edge->add_option("--beta", edge_beta, "weight of the other endpoint")
      ->capture_default_str();
  moments_edge->add_flag("--loop", edge_loop, "the edge is a loop");
  moments_edge->callback(
      [&] { run_moments_edge_law(edge_alpha, edge_beta, edge_loop, tolerance); });

  // ---- graph ----
  auto* graph = app.add_subcommand("graph", "principal-graph analyzer");
  graph->require_subcommand(1);
  GraphOptions gopt;

  auto add_graph_options = [&gopt](CLI::App* cmd) {
    cmd->add_option("--graph", gopt.file, "graph file");
    cmd->add_option("--tl", gopt.tl_spec,
                    "TL principal graph for a modulus (cos:M or NUMBER)");
    cmd->add_option("--cutoff", gopt.cutoff,
                    "truncation length for infinite chains");
  };

  auto* graph_fp = graph->add_subcommand("fp", "Frobenius-Perron weights");
  add_graph_options(graph_fp);
  graph_fp->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_fp(gopt);
  });

  auto* graph_k0 = graph->add_subcommand("k0", "identity K0 class");
  add_graph_options(graph_k0);
  int k0_k = 2;
  graph_k0->add_option("--k", k0_k, "power of the inclusion")
      ->capture_default_str();
  graph_k0->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_k0(gopt, k0_k);
  });

  auto* graph_report = graph->add_subcommand("report", "full analysis report");
  add_graph_options(graph_report);
  graph_report->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_report(gopt);
  });

  auto* graph_pp = graph->add_subcommand("pp-bound", "Pimsner-Popa basis size");
  add_graph_options(graph_pp);
  graph_pp->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_pp_bound(gopt);
  });

  auto* graph_obstruction =
      graph->add_subcommand("obstruction", "depth-2 K-theoretic obstruction");
  add_graph_options(graph_obstruction);
  graph_obstruction->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_obstruction(gopt);
  });

  auto* graph_blocks =
      graph->add_subcommand("blocks", "building-block classification");
  add_graph_options(graph_blocks);
  graph_blocks->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_blocks(gopt);
  });

  auto* graph_scale = graph->add_subcommand("scale", "positive cone and scale");
  add_graph_options(graph_scale);
  std::string scale_class;
  graph_scale->add_option("CLASS", scale_class,
                          "K0 class as NAME:COEFF,NAME:COEFF")
      ->required();
  graph_scale->callback([&] {
    gopt.tolerance = tolerance;
    run_graph_scale(gopt, scale_class);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const gjs::graph_error& e) {
    std::cerr << "input error";
    if (e.line > 0) {
      std::cerr << " at line " << e.line;
      if (e.column > 0) std::cerr << ", column " << e.column;
    }
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const gjs::parse_error& e) {
    std::cerr << "input error at position " << e.pos << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gjs::pole_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
