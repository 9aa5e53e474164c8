#include "scs/supermatrix.hpp"

#include "scs/errors.hpp"

namespace scs {

SuperMatrix::SuperMatrix(GradedDim rows, GradedDim cols, int generator_count)
    : rows_(rows), cols_(cols), q_(generator_count) {
  if (rows.even < 0 || rows.odd < 0 || cols.even < 0 || cols.odd < 0)
    throw DimensionError("supermatrix: negative dimension");
  e_.assign(static_cast<std::size_t>(rows.total()) * cols.total(), GrassmannElement(q_));
}

SuperMatrix SuperMatrix::identity(GradedDim dim, int generator_count) {
  SuperMatrix m(dim, dim, generator_count);
  for (int i = 0; i < dim.total(); ++i)
    m.set(i, i, GrassmannElement::scalar(generator_count, RationalComplex(1)));
  return m;
}

const GrassmannElement& SuperMatrix::at(int i, int j) const {
  return e_[static_cast<std::size_t>(i) * cols_.total() + j];
}

void SuperMatrix::set(int i, int j, GrassmannElement e) {
  if (e.generator_count() != q_) throw DimensionError("supermatrix entry: generator mismatch");
  e_[static_cast<std::size_t>(i) * cols_.total() + j] = std::move(e);
  parity_checked_ = false;
}

bool SuperMatrix::has_block_pattern(Parity p) const {
  for (int i = 0; i < rows_.total(); ++i)
    for (int j = 0; j < cols_.total(); ++j) {
      Parity want = row_parity(i) + col_parity(j) + p;
      if (!at(i, j).has_parity(want)) return false;
    }
  return true;
}

std::optional<Parity> SuperMatrix::parity() const {
  bool even = has_block_pattern(Parity::Even);
  bool odd = has_block_pattern(Parity::Odd);
  if (even && odd) return Parity::Even;  // zero matrix
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return std::nullopt;
}

SuperMatrix SuperMatrix::parity_part(Parity p) const {
  SuperMatrix out(rows_, cols_, q_);
  for (int i = 0; i < rows_.total(); ++i)
    for (int j = 0; j < cols_.total(); ++j)
      out.set(i, j, at(i, j).parity_part(row_parity(i) + col_parity(j) + p));
  return out;
}

SuperMatrix SuperMatrix::checked_even(SuperMatrix m) {
  if (!m.has_block_pattern(Parity::Even))
    throw ParityError("supermatrix violates the even block pattern");
  m.parity_checked_ = true;
  return m;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_) || a.q_ != b.q_)
    throw DimensionError("supermatrix add: shape mismatch");
  SuperMatrix out(a.rows_, a.cols_, a.q_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
  return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_) || a.q_ != b.q_)
    throw DimensionError("supermatrix sub: shape mismatch");
  SuperMatrix out(a.rows_, a.cols_, a.q_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
  return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.e_ == b.e_;
}

SuperMatrix supermatrix_mul(const SuperMatrix& x, const SuperMatrix& y) {
  if (!(x.col_dim() == y.row_dim()) || x.generator_count() != y.generator_count())
    throw DimensionError("supermatrix mul: inner dimensions do not match");
  SuperMatrix out(x.row_dim(), y.col_dim(), x.generator_count());
  for (int i = 0; i < x.row_dim().total(); ++i)
    for (int j = 0; j < y.col_dim().total(); ++j) {
      GrassmannElement acc(x.generator_count());
      for (int k = 0; k < x.col_dim().total(); ++k) acc += x.at(i, k) * y.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

GrassmannElement supertrace(const SuperMatrix& x) {
  if (!x.is_square()) throw DimensionError("supertrace: matrix is not square");
  GrassmannElement acc(x.generator_count());
  int r = x.row_dim().even, total = x.row_dim().total();
  for (int i = 0; i < r; ++i) acc += x.at(i, i);
  for (int i = r; i < total; ++i) {
    acc += x.at(i, i).parity_part(Parity::Odd);
    acc -= x.at(i, i).parity_part(Parity::Even);
  }
  return acc;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  auto px = x.parity(), py = y.parity();
  if (!px || !py) throw ParityError("supercommutator requires homogeneous matrices");
  SuperMatrix xy = x * y;
  SuperMatrix yx = y * x;
  if (*px == Parity::Odd && *py == Parity::Odd) return xy + yx;
  return xy - yx;
}

bool body_invertible(const std::vector<RationalComplex>& m, int n) {
  std::vector<RationalComplex> a = m;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!a[static_cast<std::size_t>(row) * n + col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
    RationalComplex inv = RationalComplex(1) / a[static_cast<std::size_t>(col) * n + col];
    for (int row = col + 1; row < n; ++row) {
      RationalComplex f = a[static_cast<std::size_t>(row) * n + col] * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(row) * n + j] -=
            f * a[static_cast<std::size_t>(col) * n + j];
    }
  }
  return true;
}

namespace {

// Exact inverse of the body matrix by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<RationalComplex>> invert_body(const std::vector<RationalComplex>& m,
                                                        int n) {
  std::vector<RationalComplex> a = m;
  std::vector<RationalComplex> inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = RationalComplex(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!a[static_cast<std::size_t>(row) * n + col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                a[static_cast<std::size_t>(col) * n + j]);
      std::swap(inv[static_cast<std::size_t>(pivot) * n + j],
                inv[static_cast<std::size_t>(col) * n + j]);
    }
    RationalComplex d = a[static_cast<std::size_t>(col) * n + col];
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(col) * n + j] = a[static_cast<std::size_t>(col) * n + j] / d;
      inv[static_cast<std::size_t>(col) * n + j] =
          inv[static_cast<std::size_t>(col) * n + j] / d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      RationalComplex f = a[static_cast<std::size_t>(row) * n + col];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(row) * n + j] -=
            f * a[static_cast<std::size_t>(col) * n + j];
        inv[static_cast<std::size_t>(row) * n + j] -=
            f * inv[static_cast<std::size_t>(col) * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

bool is_gl_rs(const SuperMatrix& x) {
  if (!x.is_square()) throw DimensionError("is_gl_rs: matrix is not square");
  if (!x.has_block_pattern(Parity::Even)) return false;
  int r = x.row_dim().even, s = x.row_dim().odd;
  std::vector<RationalComplex> b0(static_cast<std::size_t>(r) * r);
  std::vector<RationalComplex> b1(static_cast<std::size_t>(s) * s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b0[static_cast<std::size_t>(i) * r + j] = body(x.at(i, j));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      b1[static_cast<std::size_t>(i) * s + j] = body(x.at(r + i, r + j));
  return body_invertible(b0, r) && body_invertible(b1, s);
}

std::optional<SuperMatrix> grassmann_inverse(const SuperMatrix& x) {
  if (!x.is_square()) throw DimensionError("grassmann_inverse: matrix is not square");
  int n = x.row_dim().total();
  int q = x.generator_count();
  std::vector<RationalComplex> b(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i) * n + j] = body(x.at(i, j));
  auto binv = invert_body(b, n);
  if (!binv) return std::nullopt;

  SuperMatrix body_inv(x.row_dim(), x.col_dim(), q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      body_inv.set(i, j,
                   GrassmannElement::scalar(q, (*binv)[static_cast<std::size_t>(i) * n + j]));

  // X = B + N with N nilpotent: X^{-1} = sum_k (-B^{-1} N)^k B^{-1}, k <= q.
  SuperMatrix soul = x - x;  // zero of right shape
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GrassmannElement e = x.at(i, j);
      e.set_coefficient(0, RationalComplex());
      soul.set(i, j, std::move(e));
    }
  SuperMatrix step = body_inv * soul;  // B^{-1} N
  SuperMatrix acc = SuperMatrix::identity(x.row_dim(), q);
  SuperMatrix pw = SuperMatrix::identity(x.row_dim(), q);
  for (int k = 1; k <= q; ++k) {
    pw = pw * step;
    if (k & 1)
      acc = acc - pw;
    else
      acc = acc + pw;
  }
  return acc * body_inv;
}

}  // namespace scs
