#pragma once

// Matrix-valued differential forms sampled on a periodic grid over T^n.
// A field stores, per strictly increasing form multi-index I, a grid array
// of (r+s) x (r+s) complex matrices. The total Z x Z2 grading: a component
// of form degree |I| has parity |I| on the diagonal blocks and |I|+1 on the
// off-diagonal blocks.

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "scs/grading.hpp"
#include "scs/multi_index.hpp"
#include "scs/torus_grid.hpp"

namespace scs {

using cplx = std::complex<double>;

// One point of the fiber algebra End(C^{r+s}) (x) Lambda(C^n): a dense map
// from form multi-index to a matrix, flattened as (1<<n) blocks of m*m.
class AlgebraElement {
 public:
  AlgebraElement(int n, GradedDim ranks);

  int form_dim() const { return n_; }
  GradedDim ranks() const { return ranks_; }
  int msize() const { return ranks_.total(); }

  cplx* block(Mask m) { return a_.data() + static_cast<std::size_t>(m) * msize() * msize(); }
  const cplx* block(Mask m) const {
    return a_.data() + static_cast<std::size_t>(m) * msize() * msize();
  }

  void set_identity();
  void clear();
  void add_scaled(const AlgebraElement& x, double factor);
  void scale(double factor);

  // Sum over components of Frobenius norms; submultiplicative under mul.
  double norm1() const;

 private:
  int n_;
  GradedDim ranks_;
  std::vector<cplx> a_;
};

// out = x * y in the graded algebra: for components I of x and J of y with
// I and J disjoint, out[I|J] += merge_sign(I,J) * (x_I^even + (-1)^{|J|}
// x_I^odd) * y_J, where even/odd split the matrix into diagonal/off-diagonal
// blocks. The sign is the Koszul sign of a form of degree |J| passing the
// odd part of the matrix.
void algebra_mul(const AlgebraElement& x, const AlgebraElement& y, AlgebraElement& out);

// Exponential by scaling-and-squaring with an adaptive truncated series.
// The 0-form part is not nilpotent, so the series length adapts until the
// term norm drops below tol (at most max_terms terms).
AlgebraElement algebra_exp(const AlgebraElement& x, double tol, int max_terms);

class MatrixFormField {
 public:
  MatrixFormField(TorusGrid grid, GradedDim ranks);

  const TorusGrid& grid() const { return grid_; }
  GradedDim ranks() const { return ranks_; }
  int msize() const { return ranks_.total(); }
  std::size_t component_size() const { return grid_.total_points() * msize() * msize(); }

  bool has_component(Mask m) const { return comp_.count(m) != 0; }
  const std::map<Mask, std::vector<cplx>>& components() const { return comp_; }

  // Grabs (allocating zeros if absent) the storage for component I.
  std::vector<cplx>& component(Mask m);
  const std::vector<cplx>* find_component(Mask m) const;

  cplx* at(Mask m, std::size_t point) {
    return component(m).data() + point * msize() * msize();
  }

  // Declared parity: nullopt means mixed / not asserted.
  std::optional<Parity> declared_parity() const { return parity_; }
  void declare_parity(std::optional<Parity> p) { parity_ = p; }

  // Scans all stored components: matrices of the wrong block support for
  // the given total parity must vanish identically.
  bool is_homogeneous(Parity p, double tol = 0.0) const;
  std::optional<Parity> computed_parity(double tol = 0.0) const;

  // Drops components that are exactly zero.
  void prune();

  MatrixFormField& operator+=(const MatrixFormField& b);
  MatrixFormField& operator-=(const MatrixFormField& b);
  friend MatrixFormField operator+(MatrixFormField a, const MatrixFormField& b) {
    return a += b;
  }
  friend MatrixFormField operator-(MatrixFormField a, const MatrixFormField& b) {
    return a -= b;
  }
  // this += factor * b
  void add_scaled(const MatrixFormField& b, double factor);
  void scale(cplx factor);

  // Gather / scatter the fiber at one grid point.
  AlgebraElement fiber(std::size_t point) const;
  void set_fiber(std::size_t point, const AlgebraElement& v);
  void ensure_all_components();

 private:
  TorusGrid grid_;
  GradedDim ranks_;
  std::optional<Parity> parity_;
  std::map<Mask, std::vector<cplx>> comp_;
};

}  // namespace scs
