#pragma once

// Calculus on matrix-valued forms over periodic grids: graded wedge,
// spectral exterior derivative, pointwise exponential, supertrace,
// subtorus integration and sup-norm.
//
// The default entry points run the OpenMP kernels; scs::ref holds the
// serial reference drivers (same per-point arithmetic, plain loops) kept
// for testing and benchmarking. Outputs are bit-identical: parallelism is
// only over independent grid points and max-reductions.

#include "scs/form_field.hpp"

namespace scs {

struct ExpSettings {
  double tolerance = 1e-12;
  int max_terms = 200;
};

MatrixFormField wedge(const MatrixFormField& a, const MatrixFormField& b);
MatrixFormField ext_deriv(const MatrixFormField& a);
MatrixFormField ptwise_exp(const MatrixFormField& a, const ExpSettings& settings = {});
MatrixFormField supertrace_form(const MatrixFormField& a);
cplx integrate_over_subtorus(const MatrixFormField& a, Mask subtorus);
double field_norm(const MatrixFormField& a);

namespace ref {
MatrixFormField wedge(const MatrixFormField& a, const MatrixFormField& b);
MatrixFormField ext_deriv(const MatrixFormField& a);
MatrixFormField ptwise_exp(const MatrixFormField& a, const ExpSettings& settings = {});
double field_norm(const MatrixFormField& a);
}  // namespace ref

namespace detail {

// Centered spectral-derivative coefficients for an N-point periodic axis
// with unit period: d[m], m = 1..ceil(N/2)-1. The full stencil is the
// antisymmetric circulant d[N-m] = -d[m]; applying it as
//   out[j] = sum_m d[m] * (in[j-m] - in[j+m])
// makes constants differentiate to exactly zero.
const std::vector<double>& derivative_stencil(int points);

// Derivative of one component array along an axis (overwrites out).
void axis_derivative(const TorusGrid& grid, int axis, int entries_per_point,
                     const std::vector<cplx>& in, std::vector<cplx>& out, bool parallel);

// C += s * A_signed * B where diagonal-block entries of A are scaled by
// s_diag and off-diagonal entries by s_off (the graded product sign).
void gemm_block_sign(const cplx* a, const cplx* b, cplx* c, int m, int r, double s_diag,
                     double s_off);

}  // namespace detail

}  // namespace scs
