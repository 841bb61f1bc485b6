#include <vector>

#include "doctest.h"
#include "gjs/fock.hpp"

using namespace gjs;

namespace {

using Conv = GJSElement::Convention;

// Deterministic small-coefficient stream for building test vectors.
struct CoeffStream {
  unsigned long state = 0x9e3779b97f4a7c15ULL;
  Scalar next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const long num = static_cast<long>((state >> 33) % 7) - 3;
    const long den = 1 + static_cast<long>((state >> 13) % 3);
    return Scalar(Rat(num, den));
  }
};

// All single-box elements with the given left count and <= max_points.
std::vector<GJSElement> boxes_with_left(int l, int max_points) {
  std::vector<GJSElement> out;
  for (int m = 0; m <= max_points; m += 2)
    for (const auto& shape : all_shapes_total(m)) {
      if (shape.l != l) continue;
      for (const auto& arcs : all_box_contents(m))
        out.push_back(GJSElement::box(Conv::Graded, shape, arcs));
    }
  return out;
}

GJSElement combine(const std::vector<GJSElement>& pool, CoeffStream& cs) {
  GJSElement out(Conv::Graded);
  for (const auto& b : pool) out = out + b * cs.next();
  return out;
}

std::vector<GJSElement> single_top_operators(int max_points) {
  std::vector<GJSElement> out;
  for (int m = 2; m <= max_points; m += 2)
    for (const auto& shape : all_shapes_total(m)) {
      if (shape.n != 1) continue;
      for (const auto& arcs : all_box_contents(m))
        out.push_back(GJSElement::box(Conv::Graded, shape, arcs));
    }
  return out;
}

}  // namespace

TEST_CASE("fock vector bookkeeping") {
  const GJSElement vac = GJSElement::unit(Conv::Graded, 0);
  const FockVector omega = FockVector::from(2, vac);
  CHECK(!omega.truncated);
  CHECK_THROWS_AS(
      FockVector::from(1, GJSElement::box(Conv::Graded, {0, 2, 0}, {{1, 2}})),
      std::invalid_argument);
  CHECK_THROWS_AS(omega + FockVector::from(3, vac), std::invalid_argument);
}

TEST_CASE("creation and annihilation on the vacuum") {
  const Scalar d = Scalar::delta();
  const FockVector omega =
      FockVector::from(3, GJSElement::unit(Conv::Graded, 0));
  const GJSElement hook = GJSElement::box(Conv::Graded, {1, 1, 0}, {{1, 2}});

  const FockVector one = fock_create(hook, omega);
  CHECK(one.value == hook);
  CHECK(!one.truncated);

  SUBCASE("annihilation kills the vacuum") {
    CHECK(fock_annihilate(box_adjoint(hook), omega).value.is_zero());
  }
  SUBCASE("annihilation undoes creation up to a loop factor") {
    const FockVector back = fock_annihilate(box_adjoint(hook), one);
    CHECK(back.value == GJSElement::unit(Conv::Graded, 0) * d);
  }
  SUBCASE("inner product matches") {
    CHECK(fock_inner(one, one) == GJSElement::unit(Conv::Graded, 0) * d);
  }
}

TEST_CASE("creation operators truncate at the cutoff") {
  const GJSElement cupbox = GJSElement::box(Conv::Graded, {0, 2, 0}, {{1, 2}});
  // An operator raising degree by one whose right side matches l = 0.
  const GJSElement op = GJSElement::box(Conv::Graded, {1, 1, 0}, {{1, 2}});
  FockVector v = FockVector::from(2, cupbox);
  v = fock_create(op, v);  // degree 3 > cutoff 2: dropped entirely
  CHECK(v.value.is_zero());
  CHECK(v.truncated);
}

TEST_CASE("adjointness of creation and annihilation") {
  // <L+(x)v, w> = <v, L-(x^dagger)w> as B-valued pairings, including under
  // truncation (dropped creations pair against absent components of w).
  for (int cutoff : {2, 3}) {
    CoeffStream cs;
    for (const auto& x : single_top_operators(4)) {
      int lx = 0, rx = 0;
      for (const auto& [shape, content] : x.terms()) {
        lx = shape.l;
        rx = shape.r;
      }
      const GJSElement vsum = combine(boxes_with_left(rx, 4), cs);
      const GJSElement wsum = combine(boxes_with_left(lx, 4), cs);
      // Strip components beyond the cutoff before forming the vectors.
      GJSElement vkeep(Conv::Graded), wkeep(Conv::Graded);
      for (const auto& [shape, content] : vsum.terms())
        if (shape.n <= cutoff)
          for (const auto& [arcs, c] : content) vkeep.add_term(shape, arcs, c);
      for (const auto& [shape, content] : wsum.terms())
        if (shape.n <= cutoff)
          for (const auto& [arcs, c] : content) wkeep.add_term(shape, arcs, c);
      const FockVector v = FockVector::from(cutoff, vkeep);
      const FockVector w = FockVector::from(cutoff, wkeep);
      const GJSElement lhs = fock_inner(fock_create(x, v), w);
      const GJSElement rhs = fock_inner(v, fock_annihilate(box_adjoint(x), w));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("operator words via fock_apply") {
  const FockVector omega =
      FockVector::from(4, GJSElement::unit(Conv::Graded, 0));
  const GJSElement a = GJSElement::box(Conv::Graded, {1, 1, 0}, {{1, 2}});
  const GJSElement b = GJSElement::box(Conv::Graded, {2, 1, 1}, {{1, 2}, {3, 4}});
  FockVector v = omega;
  v = fock_apply(FockOp::Create, a, v);
  v = fock_apply(FockOp::Create, b, v);  // b's right side must meet a's left
  CHECK(!v.value.is_zero());
  v = fock_apply(FockOp::Annihilate, box_adjoint(b), v);
  CHECK(!v.value.is_zero());
  // A full annihilation returns to the vacuum line: degree zero.
  for (const auto& [shape, content] : v.value.terms()) CHECK(shape.n == 1);
}
