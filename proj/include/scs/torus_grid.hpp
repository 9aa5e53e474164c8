#pragma once

// Periodic grids on the flat torus T^n with unit period per axis.
// Coordinates live in [0,1); point j on axis k sits at j / points(k).

#include <cstddef>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

class TorusGrid {
 public:
  explicit TorusGrid(std::vector<int> points_per_axis);

  int dim() const { return static_cast<int>(dims_.size()); }
  int points(int axis) const { return dims_[axis]; }
  const std::vector<int>& shape() const { return dims_; }
  std::size_t total_points() const { return total_; }
  std::size_t stride(int axis) const { return strides_[axis]; }

  // Highest admissible input frequency per axis (anti-aliasing margin).
  int band_limit(int axis) const { return dims_[axis] / 4; }

  std::size_t index(const std::vector<int>& coords) const;
  std::vector<int> coords(std::size_t index) const;

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;  // row-major, last axis fastest
  std::size_t total_;
};

}  // namespace scs
