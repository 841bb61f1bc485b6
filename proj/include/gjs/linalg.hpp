#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gjs/scalar.hpp"

namespace gjs {

// Incremental exact row-echelon basis over the rational-function field.
// Vectors are dense rows of a fixed width. insert() returns nullopt when the
// vector enlarges the span; when it is dependent, it returns coefficients
// c_0..c_{k-1} expressing it as sum c_j * (j-th previously inserted vector).
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  std::optional<std::vector<Scalar>> insert(std::vector<Scalar> v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

 private:
  struct Row {
    std::vector<Scalar> vec;    // reduced, leading entry 1
    std::vector<Scalar> combo;  // vec as combination of inserted originals
    std::size_t pivot;
  };
  std::size_t width_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace gjs
