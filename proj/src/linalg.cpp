#include "gjs/linalg.hpp"

#include <stdexcept>

namespace gjs {

namespace {

Scalar combo_at(const std::vector<Scalar>& combo, std::size_t j) {
  return j < combo.size() ? combo[j] : Scalar(0);
}

}  // namespace

std::optional<std::vector<Scalar>> EchelonBasis::insert(std::vector<Scalar> v) {
  if (v.size() != width_)
    throw std::invalid_argument("EchelonBasis: wrong vector width");
  // Invariant: v_original = v + sum_j rep[j] * original_j.
  std::vector<Scalar> rep(inserted_, Scalar(0));
  for (const Row& row : rows_) {
    const Scalar f = v[row.pivot];
    if (f.is_zero()) continue;
    for (std::size_t i = row.pivot; i < width_; ++i)
      v[i] = v[i] - f * row.vec[i];
    for (std::size_t j = 0; j < inserted_; ++j)
      rep[j] = rep[j] + f * combo_at(row.combo, j);
  }
  std::size_t pivot = width_;
  for (std::size_t i = 0; i < width_; ++i)
    if (!v[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == width_) {
    ++inserted_;
    rep.resize(inserted_ - 1);  // representation uses prior vectors only
    return rep;
  }
  const Scalar lead_inv = v[pivot].inverse();
  Row row;
  row.pivot = pivot;
  row.vec.resize(width_, Scalar(0));
  for (std::size_t i = pivot; i < width_; ++i) row.vec[i] = v[i] * lead_inv;
  row.combo.resize(inserted_ + 1, Scalar(0));
  for (std::size_t j = 0; j < inserted_; ++j)
    row.combo[j] = -rep[j] * lead_inv;
  row.combo[inserted_] = lead_inv;
  rows_.push_back(std::move(row));
  ++inserted_;
  return std::nullopt;
}

}  // namespace gjs
