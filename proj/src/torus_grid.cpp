#include "scs/torus_grid.hpp"

#include <string>

namespace scs {

TorusGrid::TorusGrid(std::vector<int> points_per_axis) : dims_(std::move(points_per_axis)) {
  if (dims_.empty()) throw InputError("grid needs at least one axis");
  for (int n : dims_)
    if (n < 4) throw InputError("grid axis needs at least 4 points, got " + std::to_string(n));
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k)
    strides_[k] = strides_[k + 1] * static_cast<std::size_t>(dims_[k + 1]);
  total_ = strides_[0] * static_cast<std::size_t>(dims_[0]);
}

std::size_t TorusGrid::index(const std::vector<int>& coords) const {
  std::size_t idx = 0;
  for (int k = 0; k < dim(); ++k) {
    int c = coords[k] % dims_[k];
    if (c < 0) c += dims_[k];
    idx += strides_[k] * static_cast<std::size_t>(c);
  }
  return idx;
}

std::vector<int> TorusGrid::coords(std::size_t index) const {
  std::vector<int> c(dims_.size());
  for (int k = 0; k < dim(); ++k) {
    c[k] = static_cast<int>(index / strides_[k]);
    index %= strides_[k];
  }
  return c;
}

}  // namespace scs
