#pragma once

// Serialization of matrix form fields as lists of Fourier modes: per form
// component, pairs of {integer frequency vector, complex matrix}. Parsing
// the printed form reproduces the spec bit-exactly (doubles round-trip).
// Evaluating a spec on a grid samples the trigonometric polynomial
//   component_I(x) = sum_modes matrix * exp(2*pi*i f.x).

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "scs/cmatrix.hpp"
#include "scs/form_field.hpp"

namespace scs {

struct FieldMode {
  std::vector<int> freq;  // one integer per axis, may be negative
  CMatrix matrix;
};

struct FieldComponentModes {
  std::vector<int> index;  // 1-based strictly increasing axes; empty = 0-form
  std::vector<FieldMode> modes;
};

struct FieldModes {
  std::vector<int> grid;  // points per axis
  GradedDim ranks;
  std::vector<FieldComponentModes> components;

  friend bool operator==(const FieldModes&, const FieldModes&);
};

FieldModes parse_field_modes(const nlohmann::json& j);
nlohmann::json field_modes_to_json(const FieldModes& spec);
std::string write_field_modes(const FieldModes& spec);
FieldModes parse_field_modes_text(const std::string& text);

// Building blocks shared with the connection-file parser.
CMatrix parse_cmatrix(const nlohmann::json& j, const std::string& what);
nlohmann::json cmatrix_to_json(const CMatrix& m);
std::vector<FieldComponentModes> parse_component_list(const nlohmann::json& j, int n_axes,
                                                      int rows, int cols,
                                                      const std::string& what);
nlohmann::json component_list_to_json(const std::vector<FieldComponentModes>& components);

// Rejects frequencies beyond points_per_axis/4 on any axis of the target
// grid; `what` names the offending field in diagnostics.
void validate_band_limit(const FieldModes& spec, const TorusGrid& grid,
                         const std::string& what);

// Samples the trigonometric polynomial on the grid (the spec's own grid
// unless an override is supplied). Band limits are validated first.
MatrixFormField evaluate_modes(const FieldModes& spec, const TorusGrid& grid,
                               const std::string& what = "field");

// Discrete Fourier analysis of a sampled field; coefficients with absolute
// value <= prune_tol are dropped.
FieldModes field_to_modes(const MatrixFormField& field, double prune_tol = 1e-14);

}  // namespace scs
