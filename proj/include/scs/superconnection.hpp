#pragma once

// Superconnections D_t = D_0 + tL on E = E0 (+) E1 over a torus: curvature,
// the supertrace Chern character form, closedness and t-family checks,
// holonomy of flat connections, and degree-one transgression into C/Z.
//
// Conventions fixed here and relied on everywhere else:
//  * parallel transport solves dV/dtau = -theta_k(gamma(tau)) V, so the
//    holonomy of a constant connection form is exp(-theta_k);
//  * transgress_c1 = (1/2*pi*i) \oint tr theta mod Z, which equals
//    -(1/2*pi*i) log det(holonomy) mod Z.

#include <map>
#include <utility>
#include <vector>

#include "scs/cmatrix.hpp"
#include "scs/form_field.hpp"
#include "scs/form_ops.hpp"

namespace scs {

// A point of C/Z = (R/Z) x R: real part reduced into [0,1), imaginary part
// free.
struct ComplexModZ {
  double re01 = 0.0;
  double im = 0.0;
};

ComplexModZ reduce_mod_z(cplx v);
// Distance |a-b| with the real parts compared on the circle.
double mod_z_distance(const ComplexModZ& a, const ComplexModZ& b);

struct HolonomySettings {
  int rk4_steps = 512;
};

// Commuting invertible matrices assigned to the torus generators, one list
// per block; presents a flat bundle by its monodromy.
struct HolonomyRep {
  int n = 0;
  std::vector<CMatrix> block0;
  std::vector<CMatrix> block1;
  double commutation_tolerance = 1e-8;

  double max_commutator_residual() const;
};

// u : E0 -> E1 sampled on the grid (s x r matrix per point) together with
// constant Hermitian metrics on both blocks.
struct Morphism {
  TorusGrid grid;
  int rank0 = 0;  // r, columns of u
  int rank1 = 0;  // s, rows of u
  std::vector<cplx> u;  // total_points * rank1 * rank0, row-major per point
  CMatrix metric0;      // r x r positive definite
  CMatrix metric1;      // s x s positive definite

  Morphism(TorusGrid g, int r0, int r1);
};

class SuperConnection {
 public:
  // Validates the grading: theta must be a block-diagonal 1-form, L an
  // off-diagonal 0-form.
  SuperConnection(TorusGrid grid, GradedDim ranks, MatrixFormField theta, MatrixFormField endo,
                  double t);

  static MatrixFormField zero_theta(const TorusGrid& grid, GradedDim ranks);
  static MatrixFormField zero_endo(const TorusGrid& grid, GradedDim ranks);

  const TorusGrid& grid() const { return grid_; }
  GradedDim ranks() const { return ranks_; }
  const MatrixFormField& theta() const { return theta_; }
  const MatrixFormField& endo() const { return endo_; }
  double t() const { return t_; }
  SuperConnection with_t(double t) const;

  // theta + t*L as a single odd element of the graded algebra.
  MatrixFormField superform() const;

  // Residual of d theta + theta ^ theta; zero iff both block connections
  // are flat.
  double flatness_residual() const;
  bool is_flat_pair(double tol = 1e-10) const;

 private:
  TorusGrid grid_;
  GradedDim ranks_;
  MatrixFormField theta_;
  MatrixFormField endo_;
  double t_;
};

// F_t = (d theta + theta^theta) + t (dL + [theta,L]) + t^2 L^2, computed as
// dA + A*A for A = theta + tL in the graded algebra.
MatrixFormField curvature(const SuperConnection& c);

// str exp(F_t): scalar-valued even form representing ch(E0) - ch(E1).
MatrixFormField chern_character_form(const SuperConnection& c,
                                     const ExpSettings& settings = {});

// Sup-norm of d(str exp F); the caller compares to a tolerance.
double check_closed(const SuperConnection& c, const ExpSettings& settings = {});

// Integrals of every even-degree component of the character form over the
// matching coordinate subtorus (zero offset), keyed by the subtorus mask.
std::map<Mask, cplx> class_pairing(const SuperConnection& c, const ExpSettings& settings = {});

struct BlockPair {
  CMatrix block0;
  CMatrix block1;
};

// Parallel transport around the axis generator loop (RK4 on trigonometric
// interpolation of theta). Requires a flat pair.
BlockPair holonomy_of_flat(const SuperConnection& c, int axis,
                           const HolonomySettings& settings = {}, double flat_tol = 1e-10);

HolonomyRep holonomy_rep_of_flat(const SuperConnection& c, const HolonomySettings& settings = {},
                                 double flat_tol = 1e-10);

// (1/2*pi*i) \oint_{axis} tr theta_block mod Z, per block.
std::pair<ComplexModZ, ComplexModZ> transgress_c1(const SuperConnection& c, int axis,
                                                  double flat_tol = 1e-10);

// L = i [[0, u*], [u, 0]] with u* = G0^{-1} u^dagger G1.
MatrixFormField build_L_from_morphism(const Morphism& m);

struct FamilyCheckReport {
  std::vector<double> t_values;
  // pairings[i] : subtorus mask -> value at t_values[i]
  std::vector<std::map<Mask, cplx>> pairings;
  std::vector<double> closedness_residuals;
  double max_deviation = 0.0;  // over subtori, against the first t
};

FamilyCheckReport family_connection_check(const SuperConnection& c,
                                          const std::vector<double>& t_values,
                                          const ExpSettings& settings = {});

}  // namespace scs
