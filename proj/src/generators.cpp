#include "scs/generators.hpp"

#include <cmath>
#include <numbers>

namespace scs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> random_freq(SplitMix64& rng, const TorusGrid& grid, int max_freq) {
  std::vector<int> f(static_cast<std::size_t>(grid.dim()));
  for (int k = 0; k < grid.dim(); ++k) {
    int cap = std::min(max_freq, grid.band_limit(k));
    f[static_cast<std::size_t>(k)] = rng.uniform_int(-cap, cap);
  }
  return f;
}

}  // namespace

MatrixFormField random_homogeneous_field(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                                         Parity parity, const BandProfile& profile) {
  const int n = grid.dim();
  const int m = ranks.total();
  const int r = ranks.even;
  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = ranks;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask mask = 0; mask <= full; ++mask) {
    FieldComponentModes comp;
    comp.index = mask_to_axes(mask);
    const bool diag_blocks = mask_parity(mask) == parity;
    for (int t = 0; t < profile.modes_per_component; ++t) {
      FieldMode mode;
      mode.freq = random_freq(rng, grid, profile.max_freq);
      mode.matrix = CMatrix(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          bool diag = (i < r) == (j < r);
          if (diag == diag_blocks)
            mode.matrix(i, j) =
                rng.complex_in_disk(profile.amplitude / profile.modes_per_component);
        }
      comp.modes.push_back(std::move(mode));
    }
    spec.components.push_back(std::move(comp));
  }
  MatrixFormField field = evaluate_modes(spec, grid, "generator");
  field.declare_parity(parity);
  return field;
}

MatrixFormField random_field(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                             const BandProfile& profile) {
  const int n = grid.dim();
  const int m = ranks.total();
  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = ranks;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask mask = 0; mask <= full; ++mask) {
    FieldComponentModes comp;
    comp.index = mask_to_axes(mask);
    for (int t = 0; t < profile.modes_per_component; ++t) {
      FieldMode mode;
      mode.freq = random_freq(rng, grid, profile.max_freq);
      mode.matrix = CMatrix(m, m);
      for (auto& v : mode.matrix.a)
        v = rng.complex_in_disk(profile.amplitude / profile.modes_per_component);
      comp.modes.push_back(std::move(mode));
    }
    spec.components.push_back(std::move(comp));
  }
  return evaluate_modes(spec, grid, "generator");
}

MatrixFormField random_theta(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                             const BandProfile& profile) {
  const int n = grid.dim();
  const int m = ranks.total();
  const int r = ranks.even;
  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = ranks;
  for (int axis = 0; axis < n; ++axis) {
    FieldComponentModes comp;
    comp.index = {axis + 1};
    for (int t = 0; t < profile.modes_per_component; ++t) {
      FieldMode mode;
      mode.freq = random_freq(rng, grid, profile.max_freq);
      mode.matrix = CMatrix(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if ((i < r) == (j < r))
            mode.matrix(i, j) =
                rng.complex_in_disk(profile.amplitude / profile.modes_per_component);
      comp.modes.push_back(std::move(mode));
    }
    spec.components.push_back(std::move(comp));
  }
  MatrixFormField field = evaluate_modes(spec, grid, "generator");
  field.declare_parity(Parity::Odd);
  return field;
}

MatrixFormField constant_commuting_theta(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                                         double amplitude, bool exactly_diagonal) {
  const int n = grid.dim();
  const int m = ranks.total();
  const int r = ranks.even;
  // Per block: diagonals d_k, optionally conjugated by one common basis.
  std::vector<CMatrix> axis_mats(static_cast<std::size_t>(n), CMatrix(m, m));
  auto fill_block = [&](int offset, int size) {
    if (size == 0) return;
    std::vector<std::vector<cplx>> diag(static_cast<std::size_t>(n),
                                        std::vector<cplx>(static_cast<std::size_t>(size)));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < size; ++i) diag[k][i] = rng.complex_in_disk(amplitude);
    if (exactly_diagonal) {
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < size; ++i) axis_mats[k](offset + i, offset + i) = diag[k][i];
      return;
    }
    CMatrix basis = CMatrix::identity(size);
    for (auto& v : basis.a) v += rng.complex_in_disk(0.25);
    CMatrix basis_inv = inverse(basis);
    for (int k = 0; k < n; ++k) {
      CMatrix d(size, size);
      for (int i = 0; i < size; ++i) d(i, i) = diag[k][i];
      CMatrix blk = basis * d * basis_inv;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) axis_mats[k](offset + i, offset + j) = blk(i, j);
    }
  };
  fill_block(0, r);
  fill_block(r, m - r);

  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = ranks;
  for (int axis = 0; axis < n; ++axis) {
    FieldComponentModes comp;
    comp.index = {axis + 1};
    FieldMode mode;
    mode.freq.assign(static_cast<std::size_t>(n), 0);
    mode.matrix = axis_mats[static_cast<std::size_t>(axis)];
    comp.modes.push_back(std::move(mode));
    spec.components.push_back(std::move(comp));
  }
  MatrixFormField field = evaluate_modes(spec, grid, "generator");
  field.declare_parity(Parity::Odd);
  return field;
}

MatrixFormField constant_theta_from(const TorusGrid& grid, GradedDim ranks,
                                    const std::vector<CMatrix>& axis_matrices) {
  const int n = grid.dim();
  if (static_cast<int>(axis_matrices.size()) != n)
    throw DimensionError("constant_theta_from: one matrix per axis required");
  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = ranks;
  for (int axis = 0; axis < n; ++axis) {
    FieldComponentModes comp;
    comp.index = {axis + 1};
    FieldMode mode;
    mode.freq.assign(static_cast<std::size_t>(n), 0);
    mode.matrix = axis_matrices[static_cast<std::size_t>(axis)];
    comp.modes.push_back(std::move(mode));
    spec.components.push_back(std::move(comp));
  }
  MatrixFormField field = evaluate_modes(spec, grid, "generator");
  field.declare_parity(Parity::Odd);
  return field;
}

Morphism random_morphism(SplitMix64& rng, const TorusGrid& grid, GradedDim ranks,
                         const BandProfile& profile) {
  const int n = grid.dim();
  const int r = ranks.even;
  const int s = ranks.odd;
  Morphism mor(grid, r, s);
  struct UMode {
    std::vector<int> freq;
    CMatrix matrix;
  };
  std::vector<UMode> modes;
  for (int t = 0; t < profile.modes_per_component; ++t) {
    UMode mode;
    mode.freq = random_freq(rng, grid, profile.max_freq);
    mode.matrix = CMatrix(s, r);
    for (auto& v : mode.matrix.a)
      v = rng.complex_in_disk(profile.amplitude / profile.modes_per_component);
    modes.push_back(std::move(mode));
  }
  const std::size_t us = static_cast<std::size_t>(s) * r;
  for (std::size_t p = 0; p < grid.total_points(); ++p) {
    std::vector<int> coords = grid.coords(p);
    for (const UMode& mode : modes) {
      double phase = 0.0;
      for (int k = 0; k < n; ++k)
        phase += static_cast<double>(mode.freq[static_cast<std::size_t>(k)]) * coords[k] /
                 grid.points(k);
      const cplx w = std::polar(1.0, kTwoPi * phase);
      for (std::size_t e = 0; e < us; ++e) mor.u[p * us + e] += w * mode.matrix.a[e];
    }
  }
  return mor;
}

}  // namespace scs
