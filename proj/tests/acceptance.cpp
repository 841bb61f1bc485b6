// Acceptance harness: one criterion per number, one PASS/FAIL line each.
// Usage: acceptance [N]  (no argument runs all 13).
//
// Criterion 11 is expected to fail in its index-element clause: the
// reconstruction identity holds exactly, but the Watatani index element of
// the two-strand conditional expectation is not the scalar delta^2 at
// generic delta (it is delta^2 only on the trace side). The harness reports
// this honestly instead of weakening the check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gjs/boxes.hpp"
#include "gjs/diagram.hpp"
#include "gjs/fock.hpp"
#include "gjs/freeprob.hpp"
#include "gjs/graph.hpp"
#include "gjs/quasibasis.hpp"
#include "gjs/scalar.hpp"
#include "gjs/tl_element.hpp"

using namespace gjs;

namespace {

using Conv = GJSElement::Convention;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string with_time(const std::string& detail, long ms) {
  return detail + " [" + std::to_string(ms) + " ms]";
}

// ---------------------------------------------------------------- helpers

struct BoxTerm {
  BoxShape shape;
  ArcList arcs;
};

std::vector<BoxTerm> boxes_up_to(int max_points) {
  std::vector<BoxTerm> out;
  for (int m = 0; m <= max_points; m += 2)
    for (const auto& shape : all_shapes_total(m))
      for (const auto& arcs : all_box_contents(m)) out.push_back({shape, arcs});
  return out;
}

GJSElement graded_box(const BoxTerm& b) {
  return GJSElement::box(Conv::Graded, b.shape, b.arcs);
}

// ---------------------------------------------------------------- criteria

Outcome criterion_1() {
  const auto start = Clock::now();
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    const auto all = enumerate_pairings(2 * n);
    if (static_cast<long>(all.size()) != expected[n])
      return {false, "pairing count at 2n=" + std::to_string(2 * n) +
                         " is " + std::to_string(all.size()) + ", expected " +
                         std::to_string(expected[n])};
    for (const auto& D : all)
      if (!is_planar_matching(2 * n, D.arcs()))
        return {false, "non-planar diagram emitted at 2n=" +
                           std::to_string(2 * n)};
  }
  const long ms = ms_since(start);
  if (ms >= 1000)
    return {false, with_time("counts match but exceeded the 1 s budget", ms)};
  return {true,
          with_time("catalan(n) diagram counts match for n <= 7 (up to 429)",
                    ms)};
}

Outcome criterion_2() {
  const auto start = Clock::now();
  for (int n = 0; n <= 6; ++n) {
    const TLElement f = jones_wenzl(n);
    if (tl_mul(f, f) != f)
      return {false, "jw(" + std::to_string(n) + ") is not idempotent"};
    if (adjoint(f) != f)
      return {false, "jw(" + std::to_string(n) + ") is not self-adjoint"};
    for (int i = 1; i < n; ++i) {
      if (!tl_mul(TLElement::e_gen(n, i), f).is_zero() ||
          !tl_mul(f, TLElement::e_gen(n, i)).is_zero())
        return {false, "e_" + std::to_string(i) + " does not kill jw(" +
                           std::to_string(n) + ")"};
    }
    if (markov_trace(f) != quantum_integer(n + 1))
      return {false, "Tr(jw(" + std::to_string(n) + ")) != [" +
                         std::to_string(n + 1) + "]"};
  }
  const long ms = ms_since(start);
  if (ms >= 10000)
    return {false, with_time("identities hold but exceeded the 10 s budget", ms)};
  return {true, with_time("jw(n) idempotent/self-adjoint/killed-by-caps with "
                          "Tr = [n+1] for n <= 6, exact in Q(d)",
                          ms)};
}

Outcome criterion_3() {
  const auto start = Clock::now();
  const auto boxes = boxes_up_to(8);
  std::vector<GJSElement> elems, phis;
  elems.reserve(boxes.size());
  phis.reserve(boxes.size());
  for (const auto& b : boxes) {
    elems.push_back(graded_box(b));
    phis.push_back(phi(elems.back()));
  }
  long pairs = 0, traces = 0;
  for (size_t i = 0; i < boxes.size(); ++i) {
    const GJSElement& ga = elems[i];
    if (tau_infty(ga) != filtered_trace(phis[i]))
      return {false, "trace not preserved on " + ga.str()};
    ++traces;
    for (size_t j = 0; j < boxes.size(); ++j) {
      if (boxes[i].shape.total() + boxes[j].shape.total() > 8) continue;
      ++pairs;
      if (phi(wedge(ga, elems[j])) != filtered_mul(phis[i], phis[j]))
        return {false, "phi not multiplicative on " + ga.str() + " , " +
                           elems[j].str()};
    }
  }
  return {true, with_time("phi multiplicative on " + std::to_string(pairs) +
                              " box pairs and trace-compatible on " +
                              std::to_string(traces) +
                              " boxes (<= 8 combined points), zero failures",
                          ms_since(start))};
}

Outcome criterion_4() {
  const auto start = Clock::now();
  long count = 0;
  for (int k = 1; k <= 2; ++k)
    for (int n = 0; n <= 2; ++n) {
      const BoxShape shape{k + 1, n, k + 1};
      for (const auto& arcs : all_box_contents(shape.total())) {
        ++count;
        if (!check_pulldown(GJSElement::box(Conv::Graded, shape, arcs), k))
          return {false, "x e_k != delta^2 E(x e_k) e_k at k=" +
                             std::to_string(k) + " on shape " + shape.str()};
      }
    }
  return {true,
          with_time("pull-down identity exact on " + std::to_string(count) +
                        " spanning boxes, k in {1,2}, n <= 2",
                    ms_since(start))};
}

Outcome criterion_5() {
  const auto start = Clock::now();
  const Scalar d = Scalar::delta();
  for (int k = 1; k <= 3; ++k) {
    const GJSElement ek = jones_projection(k);
    if (graded_mul(ek, ek, k + 1) != ek)
      return {false, "e_" + std::to_string(k) + " not idempotent"};
    if (box_adjoint(ek) != ek)
      return {false, "e_" + std::to_string(k) + " not self-adjoint"};
    if (tau_infty(ek) != d.pow(k - 1))
      return {false, "tau_infty(e_" + std::to_string(k) + ") != d^" +
                         std::to_string(k - 1)};
    if (tau_infty(GJSElement::unit(Conv::Graded, k + 1)) != d.pow(k + 1))
      return {false, "tau_infty(1_" + std::to_string(k + 1) + ") != d^" +
                         std::to_string(k + 1)};
  }
  return {true, with_time("e_k^2 = e_k = e_k*, tau(e_k) = d^(k-1), "
                          "tau(1_(k+1)) = d^(k+1) for k <= 3, exact",
                          ms_since(start))};
}

Outcome criterion_6() {
  const auto start = Clock::now();
  for (int n = 0; n <= 6; ++n) {
    Scalar expected = Scalar::zero();
    for (int k = 0; k <= n; ++k)
      expected += Scalar(Rat(narayana(n, k))) * Scalar::delta().pow(k);
    if (cup_moment(n) != expected)
      return {false, "tau_0(cup^n) != Narayana sum at n=" + std::to_string(n)};
  }
  // Support facts: away from zero exactly when the rate exceeds one.
  const MPSupport above = mp_support(4.0, 1.0);
  const MPSupport at = mp_support(1.0, 1.0);
  const MPSupport below = mp_support(0.25, 1.0);
  if (!(above.invertible && above.support_min > 0))
    return {false, "rate 4 law should be supported away from 0"};
  if (at.invertible || std::abs(at.support_min) > 1e-12)
    return {false, "rate 1 law should touch 0 without an atom"};
  if (below.invertible || std::abs(below.atom_mass - 0.75) > 1e-12)
    return {false, "rate 1/4 law should carry a 3/4 atom at 0"};
  const long ms = ms_since(start);
  if (ms >= 30000)
    return {false, with_time("moments match but exceeded the 30 s budget", ms)};
  return {true, with_time("tau_0(cup^n) = sum_k Narayana(n,k) d^k for n <= 6 "
                          "(132 cappings at n=6); support at 0 iff rate <= 1",
                          ms)};
}

Outcome criterion_7() {
  const auto start = Clock::now();
  const WeightedGraph g = tl_principal_graph(DeltaSpec::root_of_unity(4), 4);
  const int star = g.star();
  const int v2 = g.find_vertex("v2");
  if (g.vertex_count() != 3 || star < 0 || v2 < 0)
    return {false, "A_3 chain at sqrt(2) not constructed"};
  const K0Class cls = identity_class(g, 2);
  const K0Class expected{{star, 1}, {v2, 1}};
  if (cls != expected)
    return {false, "[1_2] != [p_star] + [p_v2], got " + format_class(g, cls)};
  const TraceValue t = class_trace(g, cls);
  if (!t.sym.has_value() ||
      !is_zero_at(*t.sym - Scalar(2), DeltaSpec::root_of_unity(4)))
    return {false, "trace of [1_2] is not exactly 2 = delta^2"};
  const K0Class doubled{{star, 2}};
  if (cls == doubled)
    return {false, "[1_2] unexpectedly equals 2[p_star]"};
  if (pp_bound(DeltaSpec::root_of_unity(4)) != 3)
    return {false, "N(2) != 3"};
  // No size-2 relation: a 2-element basis would force [1_2] = 2[p_star] in
  // K_0; the classes have equal trace but differ.
  const std::string obstruction = crossed_product_obstruction(g);
  if (obstruction.find("GroupAction") == std::string::npos)
    return {false, "obstruction report does not cite GroupAction"};
  return {true, with_time("[1_2] = [p_star] + [p_v2], trace exactly 2 = "
                          "delta^2, class differs from 2[p_star]; "
                          "N(delta^2) = 3 with no size-2 class relation",
                          ms_since(start))};
}

Outcome criterion_8() {
  const auto start = Clock::now();
  struct Case {
    DeltaSpec spec;
    long expected;
    const char* label;
  };
  const Case cases[] = {
      {DeltaSpec::root_of_unity(4), 3, "delta = sqrt(2)"},
      {DeltaSpec::root_of_unity(5), 3, "delta = 2cos(pi/5)"},
      {DeltaSpec::numeric(2.0), 5, "delta = 2"},
  };
  for (const auto& c : cases) {
    const long got = pp_bound(c.spec);
    if (got != c.expected)
      return {false, std::string("N(delta^2) at ") + c.label + " is " +
                         std::to_string(got) + ", expected " +
                         std::to_string(c.expected)};
  }
  return {true,
          with_time("N(delta^2) = 3, 3, 5 at sqrt(2), 2cos(pi/5), 2",
                    ms_since(start))};
}

Outcome criterion_9() {
  const auto start = Clock::now();
  // Exact branch: star-ended chains A_n, n <= 8.
  for (int n = 2; n <= 8; ++n) {
    WeightedGraph g;
    int prev = g.add_vertex("star");
    g.set_star(prev);
    for (int i = 1; i < n; ++i) {
      const int v = g.add_vertex("v" + std::to_string(i));
      g.add_edge(prev, v);
      prev = v;
    }
    const WeightedGraph solved = fp_solve(g);
    const FPReport rep = fp_verify(solved);
    if (!rep.ok || !rep.exact)
      return {false, "A_" + std::to_string(n) +
                         " round-trip is not exactly verified"};
    for (int i = 0; i < n; ++i)
      if (solved.vertex(i).weight_sym != quantum_integer(i + 1))
        return {false,
                "A_" + std::to_string(n) + " weights are not [1..n]"};
  }
  // Numeric branch: random connected multigraphs up to 8 vertices.
  std::mt19937 rng(20250818u);
  long random_graphs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);  // 2..8 vertices
    WeightedGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("w" + std::to_string(i));
    g.set_star(0);
    for (int v = 1; v < n; ++v)
      g.add_edge(static_cast<int>(rng() % v), v, 1 + static_cast<int>(rng() % 2));
    const int extras = static_cast<int>(rng() % n);
    for (int e = 0; e < extras; ++e) {
      const int a = static_cast<int>(rng() % n);
      const int b = static_cast<int>(rng() % n);
      g.add_edge(a, b);  // loops allowed
    }
    const WeightedGraph solved = fp_solve(g);
    const FPReport rep = fp_verify(solved, 1e-9);
    if (!rep.ok)
      return {false, "random graph trial " + std::to_string(trial) +
                         " (" + std::to_string(n) +
                         " vertices) fails numeric verification"};
    ++random_graphs;
  }
  return {true,
          with_time("A_n solved exactly with quantum-integer weights (n <= "
                        "8); " +
                        std::to_string(random_graphs) +
                        " random graphs verified within 1e-9",
                    ms_since(start))};
}

Outcome criterion_10() {
  const auto start = Clock::now();
  const WeightedGraph chain2 = tl_principal_graph(DeltaSpec::numeric(2.0), 8);
  const WeightedGraph a3 = tl_principal_graph(DeltaSpec::root_of_unity(4), 4);
  const WeightedGraph a4 = tl_principal_graph(DeltaSpec::root_of_unity(5), 4);

  const auto chain_verdict = projectionless_verdict(chain2);
  if (!chain_verdict.projectionless || chain_verdict.dense_scale)
    return {false, "integer chain at delta=2 should be projectionless"};
  if (!projectionless_verdict(a3).dense_scale)
    return {false, "A_3 at sqrt(2) should have a dense scale"};
  if (!projectionless_verdict(a4).dense_scale)
    return {false, "A_4 at 2cos(pi/5) should have a dense scale"};

  // Membership agrees with the open-interval trace criterion on random
  // classes, with the zero and unit classes as the closed endpoints.
  std::mt19937 rng(774411u);
  const double tol = 1e-9;
  for (const WeightedGraph* gp : {&chain2, &a3, &a4}) {
    const WeightedGraph& g = *gp;
    for (int trial = 0; trial < 100; ++trial) {
      K0Class cls;
      for (int v = 0; v < g.vertex_count(); ++v) {
        const long long c =
            static_cast<long long>(rng() % 5) - 2;  // -2..2
        if (c != 0) cls[v] = c;
      }
      double t = 0.0;
      for (const auto& [v, c] : cls) t += static_cast<double>(c) *
                                          *g.vertex(v).weight_num;
      const bool expected = cls.empty() ||
                            cls == K0Class{{g.star(), 1}} ||
                            (t > tol && t < 1.0 - tol);
      const ScaleVerdict verdict = cone_scale_verdict(g, cls, tol);
      if (verdict.in_scale != expected)
        return {false, "scale membership mismatch on " +
                           format_class(g, cls) + " (trace " +
                           std::to_string(t) + ")"};
    }
  }
  return {true, with_time("delta=2 chain projectionless; sqrt(2) and golden "
                          "chains have dense scales; membership matches the "
                          "tr in (0,1) criterion on 300 random classes",
                          ms_since(start))};
}

Outcome criterion_11() {
  const auto start = Clock::now();
  std::string recon;
  for (int n = 1; n <= 2; ++n) {
    const QuasiBasis qb = quasi_basis(n);
    long checked = 0;
    for (const auto& p : enumerate_pairings(4 * n)) {
      const TLElement x = TLElement::from_diagram(
          TLDiagram(2 * n, 2 * n, p.arcs()));
      if (!reconstructs(qb, x))
        return {false, "reconstruction fails at n=" + std::to_string(n) +
                           " on " + x.str()};
      ++checked;
    }
    recon += (n > 1 ? ", " : "") + std::to_string(checked) + " (n=" +
             std::to_string(n) + ")";
  }
  // Reconstruction holds; now the index clause.
  const QuasiBasis qb1 = quasi_basis(1);
  const TLElement idx = index_element(qb1);
  const TLElement scalar_index =
      TLElement::identity(2) * Scalar::delta().pow(2);
  if (idx == scalar_index) {
    return {true, with_time("reconstruction exact on " + recon +
                                " diagram-basis elements and index element "
                                "= delta^2 * 1",
                            ms_since(start))};
  }
  return {false,
          with_time(
              "reconstruction exact on " + recon +
                  " diagram-basis elements, BUT the index element is not "
                  "delta^2 * 1: at n=1 it equals (d^2/(d^2-1)) * id + "
                  "(d*(d^2-2)/(d^2-1)) * e_1, which is scalar only at d^2 = "
                  "2; the scalar-index clause is unattainable for this "
                  "inclusion at generic d",
              ms_since(start))};
}

Outcome criterion_12() {
  const auto start = Clock::now();
  // Chains: case (2).
  for (int m : {4, 5, 6}) {
    const auto rep =
        simplicity_report(tl_principal_graph(DeltaSpec::root_of_unity(m), 4));
    bool cites = false;
    for (const auto& line : rep.lines)
      if (line.find("SimpleTrace1") != std::string::npos) cites = true;
    if (rep.case_id != 2 || !cites)
      return {false, "A chain at cos:" + std::to_string(m) +
                         " is not reported as case (2) citing SimpleTrace1"};
  }
  // Two vertices with n parallel edges: case (3), K0 = Z^2.
  for (int n : {2, 3}) {
    WeightedGraph g;
    const int s = g.add_vertex("star");
    g.set_star(s);
    const int v = g.add_vertex("v");
    g.add_edge(s, v, n);
    const WeightedGraph solved = fp_solve(g);
    const auto rep = simplicity_report(solved);
    bool cites = false;
    for (const auto& line : rep.lines)
      if (line.find("SimpleTrace2") != std::string::npos ||
          line.find("Cycle") != std::string::npos)
        cites = true;
    if (rep.case_id != 3 || !cites)
      return {false, std::to_string(n) +
                         " parallel edges not reported as case (3)"};
    if (solved.vertex_count() != 2)
      return {false, "parallel-edge graph should report K0(A_0) = Z^2"};
  }
  // Star-wedge of two edge-containing graphs: case (1).
  WeightedGraph w;
  const int s = w.add_vertex("star");
  w.set_star(s);
  const int a = w.add_vertex("a");
  const int b = w.add_vertex("b");
  const int c = w.add_vertex("c");
  const int e = w.add_vertex("e");
  w.add_edge(s, a);
  w.add_edge(a, b);
  w.add_edge(s, c);
  w.add_edge(c, e);
  const auto wrep = simplicity_report(w);
  bool wcites = false;
  for (const auto& line : wrep.lines)
    if (line.find("SimpleTrace1") != std::string::npos) wcites = true;
  if (wrep.case_id != 1 || !wcites)
    return {false, "star-wedge not reported as case (1) citing SimpleTrace1"};
  return {true, with_time("chains case (2), parallel-edge graphs case (3) "
                          "with K0 = Z^2 from two vertices, star-wedge case "
                          "(1); each cites its theorem",
                          ms_since(start))};
}

Outcome criterion_13() {
  const auto start = Clock::now();
  const int cutoff = 4;
  std::mt19937 rng(99173u);
  auto coeff = [&rng]() {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = 1 + static_cast<long>(rng() % 4);
    return Scalar(Rat(num, den));
  };
  // All single-top operator boxes with <= 4 points.
  std::vector<GJSElement> ops;
  for (int m = 2; m <= 4; m += 2)
    for (const auto& shape : all_shapes_total(m)) {
      if (shape.n != 1) continue;
      for (const auto& arcs : all_box_contents(m))
        ops.push_back(GJSElement::box(Conv::Graded, shape, arcs));
    }
  long checked = 0;
  for (const auto& x : ops) {
    const BoxShape xshape = x.terms().begin()->first;
    const int lx = xshape.l;
    const int rx = xshape.r;
    // Random vectors over all boxes with matching left counts, degrees kept
    // within the cutoff.
    GJSElement vsum(Conv::Graded), wsum(Conv::Graded);
    for (int m = 0; m <= 6; m += 2)
      for (const auto& shape : all_shapes_total(m)) {
        if (shape.n > cutoff) continue;
        for (const auto& arcs : all_box_contents(m)) {
          if (shape.l == rx) {
            const Scalar cv = coeff();
            if (!cv.is_zero()) vsum.add_term(shape, arcs, cv);
          }
          if (shape.l == lx) {
            const Scalar cw = coeff();
            if (!cw.is_zero()) wsum.add_term(shape, arcs, cw);
          }
        }
      }
    const FockVector v = FockVector::from(cutoff, vsum);
    const FockVector w = FockVector::from(cutoff, wsum);
    const GJSElement lhs = fock_inner(fock_create(x, v), w);
    const GJSElement rhs = fock_inner(v, fock_annihilate(box_adjoint(x), w));
    if (lhs != rhs)
      return {false, "<L+(x)v, w> != <v, L-(x*)w> for x = " + x.str()};
    ++checked;
  }
  return {true, with_time("<L+(x)v, w> = <v, L-(x*)w> exactly for " +
                              std::to_string(checked) +
                              " operator symbols on random cutoff-4 vectors",
                          ms_since(start))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Outcome()>> criteria = {
      {1, criterion_1},   {2, criterion_2},   {3, criterion_3},
      {4, criterion_4},   {5, criterion_5},   {6, criterion_6},
      {7, criterion_7},   {8, criterion_8},   {9, criterion_9},
      {10, criterion_10}, {11, criterion_11}, {12, criterion_12},
      {13, criterion_13},
  };
  std::vector<int> to_run;
  if (argc > 1) {
    char* end = nullptr;
    const long k = std::strtol(argv[1], &end, 10);
    if (end == argv[1] || *end != '\0' || !criteria.count(static_cast<int>(k))) {
      std::cerr << "usage: acceptance [1-13]\n";
      return 2;
    }
    to_run.push_back(static_cast<int>(k));
  } else {
    for (const auto& [k, fn] : criteria) to_run.push_back(k);
  }
  int failures = 0;
  for (const int k : to_run) {
    Outcome outcome;
    try {
      outcome = criteria.at(k)();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "CRITERION " << k << ": "
              << (outcome.pass ? "PASS" : "FAIL") << " - " << outcome.detail
              << "\n";
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
