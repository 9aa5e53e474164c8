#pragma once

// Deterministic generators for random band-limited fields, connections and
// morphisms. Both the built-in selftest and the unit suites draw from these,
// so determinism matters more than statistical quality: the stream is a
// fixed splitmix64 and does not depend on the platform.

#include <cstdint>

#include "scs/field_io.hpp"
#include "scs/superconnection.hpp"

namespace scs {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) built from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  cplx complex_in_disk(double radius) {
    return {uniform(-radius, radius), uniform(-radius, radius)};
  }
};

struct BandProfile {
  int max_freq = 1;
  double amplitude = 0.2;
  int modes_per_component = 2;
};

// Random matrix-valued field of homogeneous total parity: components of
// every form degree, with matrix support on the blocks the parity allows.
MatrixFormField random_homogeneous_field(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                                         Parity parity, const BandProfile& profile);

// Mixed-parity field (all blocks populated) for derivative-only identities.
MatrixFormField random_field(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                             const BandProfile& profile);

// Block-diagonal random 1-form (a generally non-flat connection form).
MatrixFormField random_theta(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                             const BandProfile& profile);

// Constant commuting connection form: per block, either simultaneously
// diagonal or a common conjugation of diagonals. Flat to rounding.
MatrixFormField constant_commuting_theta(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                                         double amplitude, bool exactly_diagonal);

// Random morphism u with standard metrics.
Morphism random_morphism(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                         const BandProfile& profile);

// Constant connection form with the given coefficient matrix per axis
// (block-diagonal support enforced by the SuperConnection constructor).
MatrixFormField constant_theta_from(const TorusGrid& grid, GradedDim ranks,
                                    const std::vector<CMatrix>& axis_matrices);

}  // namespace scs
