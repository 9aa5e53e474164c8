#pragma once

// Block-parity matrices over the Grassmann algebra. Rows and columns are
// graded r|s: the leading r slots are even, the trailing s odd. An even
// matrix has even entries in the diagonal blocks and odd entries in the
// off-diagonal blocks; an odd matrix has the pattern swapped.

#include <optional>
#include <vector>

#include "scs/grading.hpp"
#include "scs/grassmann.hpp"

namespace scs {

class SuperMatrix {
 public:
  SuperMatrix(GradedDim rows, GradedDim cols, int generator_count);

  static SuperMatrix identity(GradedDim dim, int generator_count);

  GradedDim row_dim() const { return rows_; }
  GradedDim col_dim() const { return cols_; }
  int generator_count() const { return q_; }
  bool is_square() const { return rows_ == cols_; }

  const GrassmannElement& at(int i, int j) const;
  void set(int i, int j, GrassmannElement e);

  // Row/column block of a slot: 0 = even range, 1 = odd range.
  Parity row_parity(int i) const { return i < rows_.even ? Parity::Even : Parity::Odd; }
  Parity col_parity(int j) const { return j < cols_.even ? Parity::Even : Parity::Odd; }

  // True when every entry is homogeneous of the parity demanded by the
  // block pattern for a matrix of parity p (zero entries always pass).
  bool has_block_pattern(Parity p) const;
  std::optional<Parity> parity() const;
  SuperMatrix parity_part(Parity p) const;

  // Whether the validating factory confirmed the even block pattern.
  bool parity_checked() const { return parity_checked_; }
  static SuperMatrix checked_even(SuperMatrix m);

  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  GradedDim rows_, cols_;
  int q_;
  bool parity_checked_ = false;
  std::vector<GrassmannElement> e_;  // row-major (rows.total x cols.total)
};

SuperMatrix supermatrix_mul(const SuperMatrix& x, const SuperMatrix& y);
inline SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  return supermatrix_mul(x, y);
}

// Graded supertrace. On even matrices this is tr(X1) - tr(X4); the odd part
// of the diagonal contributes with the opposite sign so that
// str(XY) = (-1)^{|X||Y|} str(YX) holds on homogeneous matrices.
GrassmannElement supertrace(const SuperMatrix& x);

// Supercommutator [X,Y] = XY - (-1)^{|X||Y|} YX of homogeneous matrices.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

// Membership in GL(r,s): even block pattern plus invertible body.
bool is_gl_rs(const SuperMatrix& x);

// Exact inverse over the Grassmann algebra, when it exists (body invertible).
std::optional<SuperMatrix> grassmann_inverse(const SuperMatrix& x);

// Exact invertibility of a complex-rational matrix (Gauss elimination).
bool body_invertible(const std::vector<RationalComplex>& m, int n);

}  // namespace scs
