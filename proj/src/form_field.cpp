#include "scs/form_field.hpp"

#include <algorithm>
#include <cmath>

namespace scs {

AlgebraElement::AlgebraElement(int n, GradedDim ranks) : n_(n), ranks_(ranks) {
  a_.assign((std::size_t{1} << n) * ranks.total() * ranks.total(), cplx{});
}

void AlgebraElement::set_identity() {
  clear();
  int m = msize();
  cplx* b = block(0);
  for (int i = 0; i < m; ++i) b[i * m + i] = 1.0;
}

void AlgebraElement::clear() { std::fill(a_.begin(), a_.end(), cplx{}); }

void AlgebraElement::add_scaled(const AlgebraElement& x, double factor) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += factor * x.a_[k];
}

void AlgebraElement::scale(double factor) {
  for (auto& v : a_) v *= factor;
}

double AlgebraElement::norm1() const {
  int m = msize();
  std::size_t bs = static_cast<std::size_t>(m) * m;
  double total = 0.0;
  for (Mask c = 0; c < (Mask{1} << n_); ++c) {
    double fro = 0.0;
    const cplx* b = a_.data() + c * bs;
    for (std::size_t k = 0; k < bs; ++k) fro += std::norm(b[k]);
    total += std::sqrt(fro);
  }
  return total;
}

void algebra_mul(const AlgebraElement& x, const AlgebraElement& y, AlgebraElement& out) {
  const int n = x.form_dim();
  const int m = x.msize();
  const int r = x.ranks().even;
  out.clear();
  const Mask full = (Mask{1} << n) - 1;
  for (Mask i = 0; i <= full; ++i) {
    const cplx* xb = x.block(i);
    bool xzero = true;
    for (int k = 0; k < m * m && xzero; ++k) xzero = (xb[k] == cplx{});
    if (xzero) continue;
    // Iterate subsets of the complement of i as the second factor's index.
    Mask comp = full & ~i;
    Mask j = 0;
    while (true) {
      const cplx* yb = y.block(j);
      bool yzero = true;
      for (int k = 0; k < m * m && yzero; ++k) yzero = (yb[k] == cplx{});
      if (!yzero) {
        const double s_merge = merge_sign(i, j);
        const double s_odd = (mask_degree(j) & 1) ? -s_merge : s_merge;
        cplx* ob = out.block(i | j);
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            cplx acc{};
            for (int c = 0; c < m; ++c) {
              // Diagonal-block entries of x carry s_merge, off-diagonal
              // entries pick up the extra (-1)^{|J|}.
              bool diag = (a < r) == (c < r);
              double s = diag ? s_merge : s_odd;
              acc += s * xb[a * m + c] * yb[c * m + b];
            }
            ob[a * m + b] += acc;
          }
        }
      }
      if (j == comp) break;
      j = (j - comp) & comp;  // next subset of comp
    }
  }
}

AlgebraElement algebra_exp(const AlgebraElement& x, double tol, int max_terms) {
  const int n = x.form_dim();
  AlgebraElement y = x;
  int squarings = 0;
  double a = y.norm1();
  while (a > 1.0 && squarings < 64) {
    y.scale(0.5);
    a *= 0.5;
    ++squarings;
  }
  AlgebraElement sum(n, x.ranks());
  sum.set_identity();
  AlgebraElement term = sum;
  AlgebraElement scratch(n, x.ranks());
  for (int k = 1; k <= max_terms; ++k) {
    algebra_mul(term, y, scratch);
    scratch.scale(1.0 / k);
    std::swap(term, scratch);
    sum.add_scaled(term, 1.0);
    if (term.norm1() <= tol * std::max(1.0, sum.norm1())) break;
  }
  AlgebraElement sq(n, x.ranks());
  for (int s = 0; s < squarings; ++s) {
    algebra_mul(sum, sum, sq);
    std::swap(sum, sq);
  }
  return sum;
}

MatrixFormField::MatrixFormField(TorusGrid grid, GradedDim ranks)
    : grid_(std::move(grid)), ranks_(ranks) {}

std::vector<cplx>& MatrixFormField::component(Mask m) {
  auto it = comp_.find(m);
  if (it == comp_.end()) it = comp_.emplace(m, std::vector<cplx>(component_size())).first;
  return it->second;
}

const std::vector<cplx>* MatrixFormField::find_component(Mask m) const {
  auto it = comp_.find(m);
  return it == comp_.end() ? nullptr : &it->second;
}

bool MatrixFormField::is_homogeneous(Parity p, double tol) const {
  const int m = msize();
  const int r = ranks_.even;
  for (const auto& [mask, data] : comp_) {
    Parity diag_par = mask_parity(mask);
    // If |I| matches p, off-diagonal blocks must vanish; otherwise the
    // diagonal blocks must.
    bool diag_allowed = (diag_par == p);
    for (std::size_t pt = 0; pt < grid_.total_points(); ++pt) {
      const cplx* b = data.data() + pt * m * m;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          bool diag = (i < r) == (j < r);
          if (diag == diag_allowed) continue;
          if (std::abs(b[i * m + j]) > tol) return false;
        }
    }
  }
  return true;
}

std::optional<Parity> MatrixFormField::computed_parity(double tol) const {
  bool even = is_homogeneous(Parity::Even, tol);
  bool odd = is_homogeneous(Parity::Odd, tol);
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return std::nullopt;
}

void MatrixFormField::prune() {
  for (auto it = comp_.begin(); it != comp_.end();) {
    bool zero = true;
    for (const cplx& v : it->second)
      if (v != cplx{}) {
        zero = false;
        break;
      }
    it = zero ? comp_.erase(it) : ++it;
  }
}

MatrixFormField& MatrixFormField::operator+=(const MatrixFormField& b) {
  if (!(grid_ == b.grid_) || !(ranks_ == b.ranks_))
    throw DimensionError("field add: grid/rank mismatch");
  for (const auto& [mask, data] : b.comp_) {
    auto& dst = component(mask);
    for (std::size_t k = 0; k < data.size(); ++k) dst[k] += data[k];
  }
  parity_ = std::nullopt;
  return *this;
}

MatrixFormField& MatrixFormField::operator-=(const MatrixFormField& b) {
  if (!(grid_ == b.grid_) || !(ranks_ == b.ranks_))
    throw DimensionError("field sub: grid/rank mismatch");
  for (const auto& [mask, data] : b.comp_) {
    auto& dst = component(mask);
    for (std::size_t k = 0; k < data.size(); ++k) dst[k] -= data[k];
  }
  parity_ = std::nullopt;
  return *this;
}

void MatrixFormField::add_scaled(const MatrixFormField& b, double factor) {
  if (!(grid_ == b.grid_) || !(ranks_ == b.ranks_))
    throw DimensionError("field add: grid/rank mismatch");
  for (const auto& [mask, data] : b.comp_) {
    auto& dst = component(mask);
    for (std::size_t k = 0; k < data.size(); ++k) dst[k] += factor * data[k];
  }
  parity_ = std::nullopt;
}

void MatrixFormField::scale(cplx factor) {
  for (auto& [mask, data] : comp_)
    for (auto& v : data) v *= factor;
}

AlgebraElement MatrixFormField::fiber(std::size_t point) const {
  AlgebraElement v(grid_.dim(), ranks_);
  const int m = msize();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  for (const auto& [mask, data] : comp_) {
    const cplx* src = data.data() + point * bs;
    cplx* dst = v.block(mask);
    for (std::size_t k = 0; k < bs; ++k) dst[k] = src[k];
  }
  return v;
}

void MatrixFormField::set_fiber(std::size_t point, const AlgebraElement& v) {
  const int m = msize();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  for (Mask mask = 0; mask < (Mask{1} << grid_.dim()); ++mask) {
    const cplx* src = v.block(mask);
    cplx* dst = comp_.at(mask).data() + point * bs;
    for (std::size_t k = 0; k < bs; ++k) dst[k] = src[k];
  }
}

void MatrixFormField::ensure_all_components() {
  for (Mask mask = 0; mask < (Mask{1} << grid_.dim()); ++mask) component(mask);
}

}  // namespace scs
