#include <vector>

#include "doctest.h"
#include "gjs/boxes.hpp"
#include "gjs/linalg.hpp"

using namespace gjs;

namespace {

using Conv = GJSElement::Convention;

struct BoxTerm {
  BoxShape shape;
  ArcList arcs;
};

std::vector<BoxTerm> small_boxes(int max_points) {
  std::vector<BoxTerm> out;
  for (int m = 0; m <= max_points; m += 2)
    for (const auto& shape : all_shapes_total(m))
      for (const auto& arcs : all_box_contents(m)) out.push_back({shape, arcs});
  return out;
}

GJSElement graded(const BoxTerm& b) {
  return GJSElement::box(Conv::Graded, b.shape, b.arcs);
}

// The one-box element cup = the (0,2,0) box.
GJSElement cup() { return GJSElement::box(Conv::Graded, {0, 2, 0}, {{1, 2}}); }

}  // namespace

TEST_CASE("box element bookkeeping") {
  const Scalar d = Scalar::delta();
  GJSElement x(Conv::Graded);
  x.add_term({0, 2, 0}, {{1, 2}}, d);
  x.add_term({0, 2, 0}, {{2, 1}}, -d);  // same arc, canonicalized
  CHECK(x.is_zero());
  CHECK_THROWS_AS(GJSElement::box(Conv::Graded, {0, 3, 0}, {{1, 2}}),
                  shape_error);
  CHECK_THROWS_AS(
      GJSElement::box(Conv::Graded, {0, 4, 0}, {{1, 3}, {2, 4}}),
      shape_error);
  CHECK(GJSElement::unit(Conv::Graded, 2) ==
        GJSElement::box(Conv::Graded, {2, 0, 2}, {{1, 4}, {2, 3}}));
  SUBCASE("convention mixing is rejected") {
    CHECK_THROWS_AS(cup() + GJSElement::zero(Conv::Filtered),
                    std::invalid_argument);
    CHECK_THROWS_AS(filtered_mul(cup(), cup()), std::invalid_argument);
    CHECK_THROWS_AS(phi(phi(cup())), std::invalid_argument);
  }
}

TEST_CASE("box adjoint") {
  const auto boxes = small_boxes(6);
  for (const auto& b : boxes) {
    const GJSElement x = graded(b);
    CHECK(box_adjoint(box_adjoint(x)) == x);
  }
  SUBCASE("anti-multiplicative for the wedge") {
    for (const auto& a : small_boxes(4))
      for (const auto& b : small_boxes(4)) {
        if (a.shape.r != b.shape.l) continue;
        CHECK(box_adjoint(wedge(graded(a), graded(b))) ==
              wedge(box_adjoint(graded(b)), box_adjoint(graded(a))));
      }
  }
}

TEST_CASE("wedge multiplication") {
  SUBCASE("associativity up to 6 points") {
    const auto boxes = small_boxes(4);
    for (const auto& a : boxes)
      for (const auto& b : boxes)
        for (const auto& c : boxes) {
          if (a.shape.total() + b.shape.total() + c.shape.total() > 6)
            continue;
          if (a.shape.r != b.shape.l || b.shape.r != c.shape.l) continue;
          CHECK(wedge(wedge(graded(a), graded(b)), graded(c)) ==
                wedge(graded(a), wedge(graded(b), graded(c))));
        }
  }
  SUBCASE("units of Gr_k") {
    for (int k = 0; k <= 2; ++k) {
      const GJSElement one = GJSElement::unit(Conv::Graded, k);
      CHECK(graded_mul(one, one, k) == one);
      const GJSElement ek1 = jones_projection(k + 1);
      CHECK(graded_mul(GJSElement::unit(Conv::Graded, k + 2), ek1, k + 2) ==
            ek1);
    }
  }
  SUBCASE("cup squared picks up a loop term") {
    const GJSElement c2 = wedge(cup(), cup());
    // Two cups side by side plus the nested capping is not formed by the
    // wedge (no top contractions): exactly one diagram term.
    CHECK(c2.term_count() == 1);
    CHECK(c2.coeff({0, 4, 0}, {{1, 2}, {3, 4}}) == Scalar::one());
  }
}

TEST_CASE("Voiculescu traces") {
  const Scalar d = Scalar::delta();
  SUBCASE("frozen values") {
    for (int k = 0; k <= 4; ++k)
      CHECK(tau_infty(GJSElement::unit(Conv::Graded, k)) == d.pow(k));
    for (int k = 1; k <= 4; ++k)
      CHECK(tau_infty(jones_projection(k)) == d.pow(k - 1));
    for (int k = 0; k <= 3; ++k)
      CHECK(voiculescu_trace(GJSElement::unit(Conv::Graded, k), k) ==
            Scalar::one());
  }
  SUBCASE("tau_infty kills unbalanced shapes") {
    CHECK(tau_infty(GJSElement::box(Conv::Graded, {2, 1, 1}, {{1, 2}, {3, 4}})) ==
          Scalar::zero());
  }
  SUBCASE("traciality in Gr_1 up to 6 points") {
    for (const auto& a : small_boxes(6)) {
      if (a.shape.l != 1 || a.shape.r != 1) continue;
      for (const auto& b : small_boxes(6)) {
        if (b.shape.l != 1 || b.shape.r != 1) continue;
        if (a.shape.total() + b.shape.total() > 6) continue;
        const GJSElement x = graded(a), y = graded(b);
        CHECK(voiculescu_trace(graded_mul(x, y, 1), 1) ==
              voiculescu_trace(graded_mul(y, x, 1), 1));
      }
    }
  }
}

TEST_CASE("filtered multiplication") {
  SUBCASE("associativity up to 6 points") {
    const auto boxes = small_boxes(4);
    for (const auto& a : boxes)
      for (const auto& b : boxes)
        for (const auto& c : boxes) {
          if (a.shape.total() + b.shape.total() + c.shape.total() > 6)
            continue;
          if (a.shape.r != b.shape.l || b.shape.r != c.shape.l) continue;
          const GJSElement fa =
              GJSElement::box(Conv::Filtered, a.shape, a.arcs);
          const GJSElement fb =
              GJSElement::box(Conv::Filtered, b.shape, b.arcs);
          const GJSElement fc =
              GJSElement::box(Conv::Filtered, c.shape, c.arcs);
          CHECK(filtered_mul(filtered_mul(fa, fb), fc) ==
                filtered_mul(fa, filtered_mul(fb, fc)));
        }
  }
}

TEST_CASE("change of convention phi") {
  const Scalar d = Scalar::delta();
  SUBCASE("phi of one cup has the extra scalar term") {
    const GJSElement img = phi(cup());
    CHECK(img.term_count() == 2);
    CHECK(img.coeff({0, 2, 0}, {{1, 2}}) == Scalar::one());
    CHECK(img.coeff({0, 0, 0}, {}) == d);
  }
  SUBCASE("phi of cup wedge cup is the frozen three-term sum") {
    const GJSElement img = phi(wedge(cup(), cup()));
    CHECK(img.term_count() == 3);
    CHECK(img.coeff({0, 4, 0}, {{1, 2}, {3, 4}}) == Scalar::one());
    CHECK(img.coeff({0, 2, 0}, {{1, 2}}) == d + d + Scalar(1));
    CHECK(img.coeff({0, 0, 0}, {}) == d * d + d);
  }
  SUBCASE("multiplicative and trace preserving up to 6 points") {
    const auto boxes = small_boxes(6);
    for (const auto& a : boxes) {
      const GJSElement ga = graded(a);
      if (a.shape.l == a.shape.r)
        CHECK(tau_infty(ga) == filtered_trace(phi(ga)));
      for (const auto& b : boxes) {
        if (a.shape.total() + b.shape.total() > 6) continue;
        if (a.shape.r != b.shape.l) continue;
        const GJSElement gb = graded(b);
        CHECK(phi(wedge(ga, gb)) == filtered_mul(phi(ga), phi(gb)));
      }
    }
  }
  SUBCASE("phi is injective on boxes with up to 6 points") {
    // Flatten each image over a common coordinate system and row reduce.
    const auto boxes = small_boxes(6);
    std::vector<GJSElement> images;
    std::map<std::pair<BoxShape, ArcList>, int> coords;
    for (const auto& b : boxes) {
      images.push_back(phi(graded(b)));
      for (const auto& [shape, content] : images.back().terms())
        for (const auto& [arcs, c] : content)
          coords.emplace(std::make_pair(shape, arcs),
                         static_cast<int>(coords.size()));
    }
    EchelonBasis basis(static_cast<int>(coords.size()));
    int rank = 0;
    for (const auto& img : images) {
      std::vector<Scalar> v(coords.size(), Scalar::zero());
      for (const auto& [shape, content] : img.terms())
        for (const auto& [arcs, c] : content)
          v[coords.at({shape, arcs})] = c;
      if (!basis.insert(v).has_value()) ++rank;
    }
    CHECK(rank == static_cast<int>(images.size()));
  }
}

TEST_CASE("Jones projections and expectation") {
  const Scalar d = Scalar::delta();
  SUBCASE("e_k is a self-adjoint idempotent") {
    for (int k = 1; k <= 3; ++k) {
      const GJSElement ek = jones_projection(k);
      CHECK(graded_mul(ek, ek, k + 1) == ek);
      CHECK(box_adjoint(ek) == ek);
    }
  }
  SUBCASE("expectation of e_k is the frozen scalar") {
    for (int k = 1; k <= 3; ++k)
      CHECK(cond_expectation(jones_projection(k)) ==
            GJSElement::unit(Conv::Graded, k) * d.pow(-2));
  }
  SUBCASE("unit preserving and include-compatible") {
    for (int k = 0; k <= 2; ++k) {
      CHECK(cond_expectation(GJSElement::unit(Conv::Graded, k + 1)) ==
            GJSElement::unit(Conv::Graded, k));
      CHECK(include_up(GJSElement::unit(Conv::Graded, k)) ==
            GJSElement::unit(Conv::Graded, k + 1));
    }
  }
  SUBCASE("E o include is the identity, trace compatibly") {
    for (const auto& b : small_boxes(4)) {
      if (b.shape.l != 1 || b.shape.r != 1) continue;
      const GJSElement x = graded(b);
      CHECK(cond_expectation(include_up(x)) == x);
      CHECK(voiculescu_trace(include_up(x), 2) == voiculescu_trace(x, 1));
    }
  }
  SUBCASE("pull-down identity") {
    for (int k = 1; k <= 2; ++k)
      for (int n = 0; n <= 2; ++n) {
        const BoxShape shape{k + 1, n, k + 1};
        for (const auto& arcs : all_box_contents(shape.total()))
          CHECK(check_pulldown(
              GJSElement::box(Conv::Graded, shape, arcs), k));
      }
  }
}

TEST_CASE("B-valued inner product") {
  SUBCASE("vacuum normalization") {
    const GJSElement vac = GJSElement::unit(Conv::Graded, 0);
    CHECK(inner_product_B(vac, vac) == vac);
  }
  SUBCASE("conjugate symmetry via box adjoint") {
    for (const auto& a : small_boxes(4))
      for (const auto& b : small_boxes(4)) {
        if (a.shape.l != b.shape.l || a.shape.n != b.shape.n) continue;
        const GJSElement x = graded(a), y = graded(b);
        CHECK(box_adjoint(inner_product_B(x, y)) == inner_product_B(y, x));
      }
  }
}
