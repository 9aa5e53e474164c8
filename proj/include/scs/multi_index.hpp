#pragma once

// Strictly increasing multi-indices over {1..n} packed as bitmasks.
// Bit k (0-based) stands for index k+1. Used for Grassmann monomials,
// differential-form components, and exterior-algebra monomials alike.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace scs {

using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

// Sign of sorting the concatenation (I, J) into increasing order, assuming
// I and J are disjoint. Inversions: pairs (i in I, j in J) with i > j.
inline int merge_sign(Mask i_mask, Mask j_mask) {
  int inversions = 0;
  for (Mask j = j_mask; j != 0; j &= j - 1) {
    int bit = std::countr_zero(j);
    inversions += std::popcount(i_mask >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// Sign of inserting a single index in front of the sorted set I: the index
// passes over every element of I smaller than it.
inline int insert_sign(int axis_bit, Mask i_mask) {
  int below = std::popcount(i_mask & ((Mask{1} << axis_bit) - 1));
  return (below & 1) ? -1 : 1;
}

inline std::vector<int> mask_to_axes(Mask m) {
  std::vector<int> out;
  for (Mask r = m; r != 0; r &= r - 1) out.push_back(std::countr_zero(r) + 1);
  return out;
}

// Builds a mask from 1-based strictly increasing axis labels; returns false
// on duplicates, non-increasing order, or labels outside 1..n.
bool axes_to_mask(const std::vector<int>& axes, int n, Mask* out);

// "x1^x3" for {1,3}; "1" for the empty index.
std::string mask_label(Mask m);

}  // namespace scs
