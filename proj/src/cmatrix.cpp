#include "scs/cmatrix.hpp"

#include <Eigen/Dense>

namespace scs {

namespace {

using EMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EMat> as_eigen(const CMatrix& m) {
  return Eigen::Map<const EMat>(m.a.data(), m.rows, m.cols);
}

}  // namespace

std::complex<double> determinant(const CMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("determinant: matrix is not square");
  return as_eigen(m).determinant();
}

CMatrix inverse(const CMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("inverse: matrix is not square");
  Eigen::PartialPivLU<EMat> lu(as_eigen(m));
  // PartialPivLU does not flag singularity; check the reconstruction.
  EMat inv = lu.inverse();
  if (!inv.allFinite()) throw NumericError("inverse: singular matrix");
  double residual = (as_eigen(m) * inv - EMat::Identity(m.rows, m.rows)).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, m.max_abs());
  if (!(residual <= 1e-8 * scale)) throw NumericError("inverse: matrix is numerically singular");
  CMatrix out(m.rows, m.cols);
  Eigen::Map<EMat>(out.a.data(), m.rows, m.cols) = inv;
  return out;
}

}  // namespace scs
