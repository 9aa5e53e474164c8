#include "scs/form_ops.hpp"

#include <algorithm>
#include <cmath>

// Serial reference kernels. ref::wedge goes through the dense fiber algebra
// one point at a time, which is slower than the component-pair kernel in
// form_ops.cpp but follows the sign rules in their most literal form. The
// parallel-consistency tests require the two routes to agree entrywise.

namespace scs::ref {

MatrixFormField wedge(const MatrixFormField& a, const MatrixFormField& b) {
  if (!(a.grid() == b.grid()) || !(a.ranks() == b.ranks()))
    throw DimensionError("wedge: grid/rank mismatch");
  MatrixFormField out(a.grid(), a.ranks());
  out.ensure_all_components();
  const std::size_t total = a.grid().total_points();
  AlgebraElement prod(a.grid().dim(), a.ranks());
  for (std::size_t p = 0; p < total; ++p) {
    AlgebraElement x = a.fiber(p);
    AlgebraElement y = b.fiber(p);
    algebra_mul(x, y, prod);
    out.set_fiber(p, prod);
  }
  out.prune();
  auto pa = a.declared_parity();
  auto pb = b.declared_parity();
  if (pa && pb) out.declare_parity(*pa + *pb);
  return out;
}

double field_norm(const MatrixFormField& a) {
  const int m = a.msize();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  double best = 0.0;
  for (const auto& [mask, data] : a.components()) {
    for (std::size_t p = 0; p < a.grid().total_points(); ++p) {
      double fro = 0.0;
      const cplx* blockp = data.data() + p * bs;
      for (std::size_t k = 0; k < bs; ++k) fro += std::norm(blockp[k]);
      best = std::max(best, fro);
    }
  }
  return std::sqrt(best);
}

}  // namespace scs::ref
