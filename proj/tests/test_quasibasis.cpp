#include <optional>
#include <vector>

#include "doctest.h"
#include "gjs/linalg.hpp"
#include "gjs/quasibasis.hpp"

using namespace gjs;

namespace {

std::vector<TLElement> square_basis(int n) {
  std::vector<TLElement> out;
  for (const auto& p : enumerate_pairings(2 * n))
    out.push_back(TLElement::from_diagram(TLDiagram(n, n, p.arcs())));
  return out;
}

}  // namespace

TEST_CASE("exact echelon basis with dependency extraction") {
  const Scalar d = Scalar::delta();
  EchelonBasis basis(3);
  const std::vector<Scalar> v1 = {Scalar(1), d, Scalar::zero()};
  const std::vector<Scalar> v2 = {Scalar::zero(), Scalar(1), d};
  CHECK(!basis.insert(v1).has_value());
  CHECK(!basis.insert(v2).has_value());
  CHECK(basis.rank() == 2);
  SUBCASE("dependent vectors give exact combinations") {
    // v3 = 2 v1 - d v2.
    const std::vector<Scalar> v3 = {Scalar(2), d + d - d, -d * d};
    const auto combo = basis.insert(v3);
    REQUIRE(combo.has_value());
    REQUIRE(combo->size() == 2);
    CHECK((*combo)[0] == Scalar(2));
    CHECK((*combo)[1] == -d);
    CHECK(basis.rank() == 2);
  }
  SUBCASE("independent third vector completes the space") {
    CHECK(!basis.insert({Scalar::zero(), Scalar::zero(), Scalar(1)}).has_value());
    CHECK(basis.rank() == 3);
    // Now everything is dependent.
    CHECK(basis.insert({d, d, d}).has_value());
  }
}

TEST_CASE("minimal polynomials in TL") {
  const Scalar d = Scalar::delta();
  SUBCASE("identity") {
    const auto mu = tl_minimal_polynomial(TLElement::identity(2));
    REQUIRE(mu.size() == 2);  // t - 1
    CHECK(mu[0] == -Scalar::one());
    CHECK(mu[1] == Scalar::one());
  }
  SUBCASE("cap-cup generator") {
    const auto mu = tl_minimal_polynomial(TLElement::e_gen(2, 1));
    REQUIRE(mu.size() == 3);  // t^2 - d t
    CHECK(mu[0] == Scalar::zero());
    CHECK(mu[1] == -d);
    CHECK(mu[2] == Scalar::one());
  }
  SUBCASE("jones-wenzl is an idempotent: t^2 - t") {
    const auto mu = tl_minimal_polynomial(jones_wenzl(2));
    REQUIRE(mu.size() == 3);
    CHECK(mu[0] == Scalar::zero());
    CHECK(mu[1] == -Scalar::one());
    CHECK(mu[2] == Scalar::one());
  }
}

TEST_CASE("support pseudo-inverse") {
  const Scalar d = Scalar::delta();
  SUBCASE("invertible element gives the true inverse") {
    const TLElement x =
        TLElement::identity(2) * d + TLElement::e_gen(2, 1);
    const TLElement xp = support_pseudo_inverse(x);
    CHECK(tl_mul(x, xp) == TLElement::identity(2));
  }
  SUBCASE("singular element gives a reflexive generalized inverse") {
    const TLElement e = TLElement::e_gen(2, 1);
    const TLElement ep = support_pseudo_inverse(e);
    CHECK(tl_mul(tl_mul(e, ep), e) == e);
    // e ep is the support projection: idempotent and self-adjoint.
    const TLElement s = tl_mul(e, ep);
    CHECK(tl_mul(s, s) == s);
    CHECK(adjoint(s) == s);
  }
}

TEST_CASE("expectation and inclusion for the two-strand step") {
  const Scalar d = Scalar::delta();
  for (const auto& x : square_basis(2)) {
    // Tr is preserved with the delta^2 normalization.
    CHECK(markov_trace(x) == d.pow(2) * markov_trace(down_expectation(x)));
    CHECK(down_expectation(up_include(down_expectation(x))) ==
          down_expectation(x));
  }
  CHECK(up_include(TLElement::identity(2)) == TLElement::identity(4));
}

TEST_CASE("quasi-basis reconstruction") {
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    const QuasiBasis qb = quasi_basis(n);
    CHECK(!qb.u.empty());
    for (const auto& x : square_basis(2 * n)) CHECK(reconstructs(qb, x));
    // Reconstruction is linear: a random-ish combination also reconstructs.
    TLElement mix(2 * n, 2 * n);
    long k = 1;
    for (const auto& x : square_basis(2 * n)) {
      mix = mix + x * Scalar(Rat(k, k + 2));
      ++k;
    }
    CHECK(reconstructs(qb, mix));
  }
}

TEST_CASE("index element for the n = 1 step") {
  const Scalar d = Scalar::delta();
  const QuasiBasis qb = quasi_basis(1);
  const TLElement idx = index_element(qb);
  // Exact closed form: d^2/(d^2-1) id + d(d^2-2)/(d^2-1) e. Not the scalar
  // d^2: the Watatani index of this conditional expectation is not scalar.
  const Scalar dd = d * d;
  const TLElement expected =
      TLElement::identity(2) * (dd / (dd - Scalar(1))) +
      TLElement::e_gen(2, 1) * (d * (dd - Scalar(2)) / (dd - Scalar(1)));
  CHECK(idx == expected);
  CHECK(idx != TLElement::identity(2) * dd);
  SUBCASE("the index element is A-central") {
    // It commutes with the image of TL_0 (scalars) trivially and with the
    // relative commutant generator e.
    const TLElement e = TLElement::e_gen(2, 1);
    CHECK(tl_mul(idx, e) == tl_mul(e, idx));
  }
}
