#pragma once

#include <string>

#include "gjs/boxes.hpp"

namespace gjs {

// A vector in the truncated Fock module: a sum of boxes graded by their
// top-string count n, kept only up to n = cutoff. `truncated` records that a
// creation operator pushed some component past the cutoff (the component was
// dropped, so subsequent results are exact for the truncated module only).
struct FockVector {
  int cutoff = 0;
  bool truncated = false;
  GJSElement value{GJSElement::Convention::Graded};

  static FockVector from(int cutoff, const GJSElement& v);

  FockVector operator+(const FockVector& o) const;
  FockVector operator*(const Scalar& c) const;
  bool operator==(const FockVector& o) const {
    return cutoff == o.cutoff && value == o.value;
  }
  std::string str() const;
};

// Creation by x (every term of x must have exactly one top string): joins
// x's right side to the component's left side and raises the degree by one.
// Components that would exceed the cutoff are dropped and flagged.
FockVector fock_create(const GJSElement& x, const FockVector& v);

// Annihilation by x: joins x's right side to the component's left side and
// caps x's single top string onto the component's leftmost top string.
// Degree-zero components are killed.
FockVector fock_annihilate(const GJSElement& x, const FockVector& v);

enum class FockOp { Create, Annihilate };
FockVector fock_apply(FockOp op, const GJSElement& x, const FockVector& v);

// B-valued pairing of Fock vectors: sum of inner_product_B over components
// (automatically zero across different degrees or left counts).
GJSElement fock_inner(const FockVector& v, const FockVector& w);

}  // namespace gjs
