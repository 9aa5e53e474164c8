#pragma once

// Minimal dense complex matrix used for holonomies, metrics and morphism
// blocks. Heavy factorizations (eigen, LU, Cholesky) are delegated to Eigen
// inside the .cpp files that need them.

#include <complex>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> a;  // row-major

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::complex<double>& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const std::complex<double>& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols != y.rows) throw DimensionError("cmatrix mul: inner dimension mismatch");
    CMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < y.cols; ++j) {
        std::complex<double> acc{};
        for (int k = 0; k < x.cols; ++k) acc += x(i, k) * y(k, j);
        out(i, j) = acc;
      }
    return out;
  }

  friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("cmatrix add: shape mismatch");
    CMatrix out = x;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
    return out;
  }

  friend CMatrix operator*(std::complex<double> s, const CMatrix& x) {
    CMatrix out = x;
    for (auto& v : out.a) v *= s;
    return out;
  }

  friend bool operator==(const CMatrix& x, const CMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  CMatrix adjoint() const {
    CMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
  }
};

std::complex<double> determinant(const CMatrix& m);
CMatrix inverse(const CMatrix& m);  // throws NumericError when singular

}  // namespace scs
