#include "scs/form_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace scs {

namespace detail {

const std::vector<double>& derivative_stencil(int points) {
  static std::map<int, std::vector<double>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;
  const double pi = std::numbers::pi;
  std::vector<double> d(static_cast<std::size_t>((points + 1) / 2));  // d[0] unused
  if (points % 2 == 0) {
    for (int m = 1; m <= points / 2 - 1; ++m)
      d[m] = ((m & 1) ? -pi : pi) / std::tan(pi * m / points);
  } else {
    for (int m = 1; m <= (points - 1) / 2; ++m)
      d[m] = ((m & 1) ? -pi : pi) / std::sin(pi * m / points);
  }
  return cache.emplace(points, std::move(d)).first->second;
}

void axis_derivative(const TorusGrid& grid, int axis, int entries_per_point,
                     const std::vector<cplx>& in, std::vector<cplx>& out, bool parallel) {
  const int n_pts = grid.points(axis);
  const std::vector<double>& d = derivative_stencil(n_pts);
  const std::ptrdiff_t stride =
      static_cast<std::ptrdiff_t>(grid.stride(axis)) * entries_per_point;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(grid.total_points());
  const int half = static_cast<int>(d.size()) - 1;  // number of stencil pairs

#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t p = 0; p < total; ++p) {
    const int j = static_cast<int>((p / static_cast<std::ptrdiff_t>(grid.stride(axis))) % n_pts);
    const std::ptrdiff_t base = p * entries_per_point;
    for (int e = 0; e < entries_per_point; ++e) {
      cplx acc{};
      for (int m = 1; m <= half; ++m) {
        int jm = j - m;
        if (jm < 0) jm += n_pts;
        int jp = j + m;
        if (jp >= n_pts) jp -= n_pts;
        const std::ptrdiff_t lo = base + static_cast<std::ptrdiff_t>(jm - j) * stride;
        const std::ptrdiff_t hi = base + static_cast<std::ptrdiff_t>(jp - j) * stride;
        acc += d[m] * (in[lo + e] - in[hi + e]);
      }
      out[base + e] = acc;
    }
  }
}

void gemm_block_sign(const cplx* a, const cplx* b, cplx* c, int m, int r, double s_diag,
                     double s_off) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cplx acc{};
      for (int k = 0; k < m; ++k) {
        const double s = ((i < r) == (k < r)) ? s_diag : s_off;
        acc += s * a[i * m + k] * b[k * m + j];
      }
      c[i * m + j] += acc;
    }
}

namespace {

bool all_zero(const std::vector<cplx>& v) {
  for (const cplx& x : v)
    if (x != cplx{}) return false;
  return true;
}

MatrixFormField wedge_impl(const MatrixFormField& a, const MatrixFormField& b, bool parallel) {
  if (!(a.grid() == b.grid()) || !(a.ranks() == b.ranks()))
    throw DimensionError("wedge: grid/rank mismatch");
  const int m = a.msize();
  const int r = a.ranks().even;
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(a.grid().total_points());
  MatrixFormField out(a.grid(), a.ranks());
  for (const auto& [mi, da] : a.components()) {
    if (all_zero(da)) continue;
    for (const auto& [mj, db] : b.components()) {
      if ((mi & mj) != 0) continue;
      if (all_zero(db)) continue;
      const double s_merge = merge_sign(mi, mj);
      const double s_odd = (mask_degree(mj) & 1) ? -s_merge : s_merge;
      auto& dst = out.component(mi | mj);
      const cplx* pa = da.data();
      const cplx* pb = db.data();
      cplx* pc = dst.data();
#pragma omp parallel for schedule(static) if (parallel)
      for (std::ptrdiff_t p = 0; p < total; ++p)
        gemm_block_sign(pa + p * bs, pb + p * bs, pc + p * bs, m, r, s_merge, s_odd);
    }
  }
  auto pa = a.declared_parity();
  auto pb = b.declared_parity();
  if (pa && pb) out.declare_parity(*pa + *pb);
  return out;
}

MatrixFormField ext_deriv_impl(const MatrixFormField& a, bool parallel) {
  const int n = a.grid().dim();
  const int m = a.msize();
  MatrixFormField out(a.grid(), a.ranks());
  std::vector<cplx> deriv(a.component_size());
  for (const auto& [mask, data] : a.components()) {
    for (int axis = 0; axis < n; ++axis) {
      const Mask bit = Mask{1} << axis;
      if (mask & bit) continue;  // dx_k ^ dx_I = 0
      axis_derivative(a.grid(), axis, m * m, data, deriv, parallel);
      const double sign = insert_sign(axis, mask);
      auto& dst = out.component(mask | bit);
      for (std::size_t k = 0; k < deriv.size(); ++k) dst[k] += sign * deriv[k];
    }
  }
  if (auto p = a.declared_parity()) out.declare_parity(*p + Parity::Odd);
  return out;
}

MatrixFormField ptwise_exp_impl(const MatrixFormField& a, const ExpSettings& settings,
                                bool parallel) {
  auto declared = a.declared_parity();
  if (declared && *declared != Parity::Even)
    throw ParityError("ptwise_exp: input declared odd parity");
  if (!declared && !a.is_homogeneous(Parity::Even))
    throw ParityError("ptwise_exp: input is not homogeneous of even parity");
  MatrixFormField out(a.grid(), a.ranks());
  out.ensure_all_components();
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(a.grid().total_points());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t p = 0; p < total; ++p) {
    AlgebraElement x = a.fiber(static_cast<std::size_t>(p));
    AlgebraElement e = algebra_exp(x, settings.tolerance, settings.max_terms);
    out.set_fiber(static_cast<std::size_t>(p), e);
  }
  out.prune();
  out.declare_parity(Parity::Even);
  return out;
}

double field_norm_impl(const MatrixFormField& a, bool parallel) {
  const int m = a.msize();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  double best = 0.0;
  for (const auto& [mask, data] : a.components()) {
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(a.grid().total_points());
    const cplx* pd = data.data();
    double comp_best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : comp_best) if (parallel)
    for (std::ptrdiff_t p = 0; p < total; ++p) {
      double fro = 0.0;
      const cplx* b = pd + p * bs;
      for (std::size_t k = 0; k < bs; ++k) fro += std::norm(b[k]);
      comp_best = std::max(comp_best, fro);
    }
    best = std::max(best, comp_best);
  }
  return std::sqrt(best);
}

}  // namespace
}  // namespace detail

MatrixFormField wedge(const MatrixFormField& a, const MatrixFormField& b) {
  return detail::wedge_impl(a, b, true);
}
MatrixFormField ext_deriv(const MatrixFormField& a) { return detail::ext_deriv_impl(a, true); }
MatrixFormField ptwise_exp(const MatrixFormField& a, const ExpSettings& settings) {
  return detail::ptwise_exp_impl(a, settings, true);
}
double field_norm(const MatrixFormField& a) { return detail::field_norm_impl(a, true); }

namespace ref {
MatrixFormField ext_deriv(const MatrixFormField& a) { return detail::ext_deriv_impl(a, false); }
MatrixFormField ptwise_exp(const MatrixFormField& a, const ExpSettings& settings) {
  return detail::ptwise_exp_impl(a, settings, false);
}
}  // namespace ref

MatrixFormField supertrace_form(const MatrixFormField& a) {
  const int m = a.msize();
  const int r = a.ranks().even;
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  MatrixFormField out(a.grid(), GradedDim{1, 0});
  for (const auto& [mask, data] : a.components()) {
    auto& dst = out.component(mask);
    const std::size_t total = a.grid().total_points();
    for (std::size_t p = 0; p < total; ++p) {
      const cplx* b = data.data() + p * bs;
      cplx tr0{}, tr1{};
      for (int i = 0; i < r; ++i) tr0 += b[i * m + i];
      for (int i = r; i < m; ++i) tr1 += b[i * m + i];
      dst[p] = tr0 - tr1;
    }
  }
  out.declare_parity(a.declared_parity());
  return out;
}

cplx integrate_over_subtorus(const MatrixFormField& a, Mask subtorus) {
  if (a.msize() != 1)
    throw DimensionError("integrate_over_subtorus: field must be scalar-valued");
  const int n = a.grid().dim();
  if (subtorus >= (Mask{1} << n))
    throw InputError("integrate_over_subtorus: multi-index outside grid axes");
  const std::vector<cplx>* data = a.find_component(subtorus);
  if (!data) return cplx{};
  // Trapezoidal sum over the coordinate subtorus at zero offset: exact for
  // band-limited periodic data.
  std::vector<int> axes = mask_to_axes(subtorus);
  double h = 1.0;
  std::size_t count = 1;
  for (int ax : axes) {
    h /= a.grid().points(ax - 1);
    count *= static_cast<std::size_t>(a.grid().points(ax - 1));
  }
  cplx sum{};
  std::vector<int> coords(n, 0);
  for (std::size_t sub = 0; sub < count; ++sub) {
    std::size_t rem = sub;
    for (int ax : axes) {
      coords[ax - 1] = static_cast<int>(rem % a.grid().points(ax - 1));
      rem /= a.grid().points(ax - 1);
    }
    sum += (*data)[a.grid().index(coords)];
  }
  return sum * h;
}

}  // namespace scs
