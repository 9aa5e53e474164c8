#include "scs/superconnection.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace scs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using EMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// theta holds D_0 = d + theta and must preserve the grading: 1-form
// components only, with vanishing off-diagonal blocks.
void validate_theta(const MatrixFormField& theta, GradedDim ranks) {
  const int m = ranks.total();
  const int r = ranks.even;
  for (const auto& [mask, data] : theta.components()) {
    if (mask_degree(mask) != 1)
      throw ParityError("theta must be a 1-form: found a component of degree " +
                        std::to_string(mask_degree(mask)));
    for (std::size_t p = 0; p < theta.grid().total_points(); ++p) {
      const cplx* b = data.data() + p * static_cast<std::size_t>(m) * m;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (((i < r) != (j < r)) && b[i * m + j] != cplx{})
            throw ParityError(
                "theta must preserve grading: nonzero off-diagonal block entry in component " +
                mask_label(mask));
    }
  }
}

// L is an odd endomorphism: a 0-form with vanishing diagonal blocks.
void validate_endo(const MatrixFormField& endo, GradedDim ranks) {
  const int m = ranks.total();
  const int r = ranks.even;
  for (const auto& [mask, data] : endo.components()) {
    if (mask != 0)
      throw ParityError("L must be a 0-form: found a component " + mask_label(mask));
    for (std::size_t p = 0; p < endo.grid().total_points(); ++p) {
      const cplx* b = data.data() + p * static_cast<std::size_t>(m) * m;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (((i < r) == (j < r)) && b[i * m + j] != cplx{})
            throw ParityError("L must be odd: nonzero diagonal block entry");
    }
  }
}

}  // namespace

ComplexModZ reduce_mod_z(cplx v) {
  double re = v.real() - std::floor(v.real());
  if (re >= 1.0) re = 0.0;  // guard the rounding edge at the seam
  return {re, v.imag()};
}

double mod_z_distance(const ComplexModZ& a, const ComplexModZ& b) {
  double dre = std::abs(a.re01 - b.re01);
  dre = std::min(dre, 1.0 - dre);
  return std::hypot(dre, a.im - b.im);
}

double HolonomyRep::max_commutator_residual() const {
  double worst = 0.0;
  auto scan = [&](const std::vector<CMatrix>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        CMatrix ab = gens[i] * gens[j];
        CMatrix ba = gens[j] * gens[i];
        for (std::size_t k = 0; k < ab.a.size(); ++k)
          worst = std::max(worst, std::abs(ab.a[k] - ba.a[k]));
      }
  };
  scan(block0);
  scan(block1);
  return worst;
}

Morphism::Morphism(TorusGrid g, int r0, int r1)
    : grid(std::move(g)),
      rank0(r0),
      rank1(r1),
      u(grid.total_points() * static_cast<std::size_t>(r0) * r1),
      metric0(CMatrix::identity(r0)),
      metric1(CMatrix::identity(r1)) {}

SuperConnection::SuperConnection(TorusGrid grid, GradedDim ranks, MatrixFormField theta,
                                 MatrixFormField endo, double t)
    : grid_(std::move(grid)),
      ranks_(ranks),
      theta_(std::move(theta)),
      endo_(std::move(endo)),
      t_(t) {
  if (!(theta_.grid() == grid_) || !(endo_.grid() == grid_))
    throw DimensionError("superconnection: field grids do not match");
  if (!(theta_.ranks() == ranks_) || !(endo_.ranks() == ranks_))
    throw DimensionError("superconnection: field ranks do not match");
  validate_theta(theta_, ranks_);
  validate_endo(endo_, ranks_);
  theta_.declare_parity(Parity::Odd);
  endo_.declare_parity(Parity::Odd);
}

MatrixFormField SuperConnection::zero_theta(const TorusGrid& grid, GradedDim ranks) {
  MatrixFormField f(grid, ranks);
  f.declare_parity(Parity::Odd);
  return f;
}

MatrixFormField SuperConnection::zero_endo(const TorusGrid& grid, GradedDim ranks) {
  return zero_theta(grid, ranks);
}

SuperConnection SuperConnection::with_t(double t) const {
  return SuperConnection(grid_, ranks_, theta_, endo_, t);
}

MatrixFormField SuperConnection::superform() const {
  MatrixFormField a = theta_;
  a.add_scaled(endo_, t_);
  a.declare_parity(Parity::Odd);
  return a;
}

double SuperConnection::flatness_residual() const {
  MatrixFormField f = ext_deriv(theta_) + wedge(theta_, theta_);
  return field_norm(f);
}

bool SuperConnection::is_flat_pair(double tol) const { return flatness_residual() <= tol; }

MatrixFormField curvature(const SuperConnection& c) {
  MatrixFormField a = c.superform();
  MatrixFormField f = ext_deriv(a) + wedge(a, a);
  f.declare_parity(Parity::Even);
  return f;
}

MatrixFormField chern_character_form(const SuperConnection& c, const ExpSettings& settings) {
  return supertrace_form(ptwise_exp(curvature(c), settings));
}

double check_closed(const SuperConnection& c, const ExpSettings& settings) {
  return field_norm(ext_deriv(chern_character_form(c, settings)));
}

std::map<Mask, cplx> class_pairing(const SuperConnection& c, const ExpSettings& settings) {
  MatrixFormField ch = chern_character_form(c, settings);
  std::map<Mask, cplx> out;
  const Mask full = (Mask{1} << c.grid().dim()) - 1;
  for (Mask mask = 0; mask <= full; ++mask) {
    if (mask_degree(mask) % 2 != 0) continue;
    out[mask] = integrate_over_subtorus(ch, mask);
  }
  return out;
}

namespace {

// Trigonometric interpolant of one connection component along a coordinate
// axis line through the origin. Evaluation at arbitrary tau feeds the
// transport integrator.
class LineInterpolant {
 public:
  LineInterpolant(const SuperConnection& c, int axis) {
    const TorusGrid& grid = c.grid();
    n_pts_ = grid.points(axis);
    msize_ = c.ranks().total();
    const Mask mask = Mask{1} << axis;
    const std::vector<cplx>* comp = c.theta().find_component(mask);
    const std::size_t bs = static_cast<std::size_t>(msize_) * msize_;
    std::vector<CMatrix> samples(n_pts_, CMatrix(msize_, msize_));
    if (comp) {
      std::vector<int> coords(grid.dim(), 0);
      for (int j = 0; j < n_pts_; ++j) {
        coords[axis] = j;
        const cplx* b = comp->data() + grid.index(coords) * bs;
        for (std::size_t e = 0; e < bs; ++e) samples[j].a[e] = b[e];
      }
    }
    // DFT of the samples; bin N/2 (even N) is split evenly between the
    // +N/2 and -N/2 exponentials when evaluating.
    coef_.assign(n_pts_, CMatrix(msize_, msize_));
    for (int f = 0; f < n_pts_; ++f)
      for (int j = 0; j < n_pts_; ++j) {
        const cplx w = std::polar(1.0 / n_pts_, -kTwoPi * f * j / n_pts_);
        for (std::size_t e = 0; e < coef_[f].a.size(); ++e)
          coef_[f].a[e] += w * samples[j].a[e];
      }
  }

  CMatrix eval(double tau) const {
    CMatrix out(msize_, msize_);
    for (int f = 0; f < n_pts_; ++f) {
      int signed_f = f <= n_pts_ / 2 ? f : f - n_pts_;
      cplx w;
      if (n_pts_ % 2 == 0 && f == n_pts_ / 2)
        w = 0.5 * (std::polar(1.0, kTwoPi * signed_f * tau) +
                   std::polar(1.0, -kTwoPi * signed_f * tau));
      else
        w = std::polar(1.0, kTwoPi * signed_f * tau);
      for (std::size_t e = 0; e < out.a.size(); ++e) out.a[e] += w * coef_[f].a[e];
    }
    return out;
  }

 private:
  int n_pts_ = 0;
  int msize_ = 0;
  std::vector<CMatrix> coef_;
};

}  // namespace

BlockPair holonomy_of_flat(const SuperConnection& c, int axis, const HolonomySettings& settings,
                           double flat_tol) {
  if (axis < 0 || axis >= c.grid().dim())
    throw InputError("holonomy: axis out of range");
  double residual = c.flatness_residual();
  if (!(residual <= flat_tol))
    throw NumericError("holonomy requires a flat pair: residual " + std::to_string(residual));
  const int m = c.ranks().total();
  LineInterpolant theta_line(c, axis);

  const int steps = settings.rk4_steps;
  const double h = 1.0 / steps;
  // dV/dtau = -theta(tau) V, V(0) = I.
  CMatrix v = CMatrix::identity(m);
  for (int i = 0; i < steps; ++i) {
    const double tau = i * h;
    CMatrix a1 = -1.0 * theta_line.eval(tau);
    CMatrix a2 = -1.0 * theta_line.eval(tau + 0.5 * h);
    CMatrix a4 = -1.0 * theta_line.eval(tau + h);
    CMatrix k1 = a1 * v;
    CMatrix k2 = a2 * (v + (0.5 * h) * k1);
    CMatrix k3 = a2 * (v + (0.5 * h) * k2);
    CMatrix k4 = a4 * (v + h * k3);
    v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const int r = c.ranks().even;
  const int s = c.ranks().odd;
  BlockPair out{CMatrix(r, r), CMatrix(s, s)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.block0(i, j) = v(i, j);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out.block1(i, j) = v(r + i, r + j);
  return out;
}

HolonomyRep holonomy_rep_of_flat(const SuperConnection& c, const HolonomySettings& settings,
                                 double flat_tol) {
  HolonomyRep rep;
  rep.n = c.grid().dim();
  for (int axis = 0; axis < rep.n; ++axis) {
    BlockPair hol = holonomy_of_flat(c, axis, settings, flat_tol);
    rep.block0.push_back(std::move(hol.block0));
    rep.block1.push_back(std::move(hol.block1));
  }
  return rep;
}

std::pair<ComplexModZ, ComplexModZ> transgress_c1(const SuperConnection& c, int axis,
                                                  double flat_tol) {
  if (axis < 0 || axis >= c.grid().dim())
    throw InputError("transgress_c1: axis out of range");
  double residual = c.flatness_residual();
  if (!(residual <= flat_tol))
    throw NumericError("transgress_c1 requires a flat pair: residual " +
                       std::to_string(residual));
  const TorusGrid& grid = c.grid();
  const int m = c.ranks().total();
  const int r = c.ranks().even;
  const Mask mask = Mask{1} << axis;
  const std::vector<cplx>* comp = c.theta().find_component(mask);
  cplx tr0{}, tr1{};
  if (comp) {
    const std::size_t bs = static_cast<std::size_t>(m) * m;
    std::vector<int> coords(grid.dim(), 0);
    const int n_pts = grid.points(axis);
    for (int j = 0; j < n_pts; ++j) {
      coords[axis] = j;
      const cplx* b = comp->data() + grid.index(coords) * bs;
      for (int i = 0; i < r; ++i) tr0 += b[i * m + i];
      for (int i = r; i < m; ++i) tr1 += b[i * m + i];
    }
    tr0 /= static_cast<double>(n_pts);
    tr1 /= static_cast<double>(n_pts);
  }
  const cplx inv_2pii = cplx{0.0, -1.0 / kTwoPi};  // 1/(2*pi*i)
  return {reduce_mod_z(inv_2pii * tr0), reduce_mod_z(inv_2pii * tr1)};
}

MatrixFormField build_L_from_morphism(const Morphism& m) {
  const int r = m.rank0;
  const int s = m.rank1;
  if (m.metric0.rows != r || m.metric0.cols != r || m.metric1.rows != s || m.metric1.cols != s)
    throw DimensionError("morphism metric shapes do not match the ranks");
  auto check_metric = [](const CMatrix& g, const char* name) {
    double scale = std::max(1.0, g.max_abs());
    CMatrix diff = g + (-1.0) * g.adjoint();
    if (diff.max_abs() > 1e-12 * scale)
      throw NumericError(std::string(name) + " metric must be Hermitian");
    Eigen::Map<const EMat> eg(g.a.data(), g.rows, g.cols);
    Eigen::LLT<Eigen::MatrixXcd> llt(eg);
    if (llt.info() != Eigen::Success)
      throw NumericError(std::string(name) + " metric must be positive definite");
  };
  check_metric(m.metric0, "block0");
  check_metric(m.metric1, "block1");

  const CMatrix g0_inv = inverse(m.metric0);
  const int msz = r + s;
  MatrixFormField out(m.grid, GradedDim{r, s});
  auto& dst = out.component(0);
  const std::size_t bs = static_cast<std::size_t>(msz) * msz;
  const std::size_t us = static_cast<std::size_t>(s) * r;
  const cplx iunit{0.0, 1.0};
  for (std::size_t p = 0; p < m.grid.total_points(); ++p) {
    CMatrix up(s, r);
    for (std::size_t e = 0; e < us; ++e) up.a[e] = m.u[p * us + e];
    CMatrix ustar = g0_inv * up.adjoint() * m.metric1;  // r x s
    cplx* b = dst.data() + p * bs;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j) b[i * msz + (r + j)] = iunit * ustar(i, j);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < r; ++j) b[(r + i) * msz + j] = iunit * up(i, j);
  }
  out.declare_parity(Parity::Odd);
  return out;
}

FamilyCheckReport family_connection_check(const SuperConnection& c,
                                          const std::vector<double>& t_values,
                                          const ExpSettings& settings) {
  FamilyCheckReport report;
  report.t_values = t_values;
  for (double t : t_values) {
    SuperConnection ct = c.with_t(t);
    report.pairings.push_back(class_pairing(ct, settings));
    report.closedness_residuals.push_back(check_closed(ct, settings));
  }
  if (!report.pairings.empty()) {
    const auto& base = report.pairings.front();
    for (const auto& p : report.pairings)
      for (const auto& [mask, value] : p) {
        auto it = base.find(mask);
        cplx ref = it == base.end() ? cplx{} : it->second;
        report.max_deviation = std::max(report.max_deviation, std::abs(value - ref));
      }
  }
  return report;
}

}  // namespace scs
