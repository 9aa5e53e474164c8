#pragma once

// Z2 parity and graded dimensions r|s, shared by the exact-algebra and the
// numeric form-calculus layers.

#include "scs/multi_index.hpp"

namespace scs {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline Parity mask_parity(Mask m) { return static_cast<Parity>(mask_degree(m) & 1); }

struct GradedDim {
  int even = 0;
  int odd = 0;
  int total() const { return even + odd; }
  friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

}  // namespace scs
