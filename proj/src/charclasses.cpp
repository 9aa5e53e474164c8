#include "scs/charclasses.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace scs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_to_half(double x) {
  double w = x - std::round(x);
  return w;
}

}  // namespace

RingElement reduce_element_mod_z(const RingElement& e) {
  RingElement out(e.dim());
  for (const auto& [m, c] : e.terms()) {
    ComplexModZ r = reduce_mod_z(c);
    out.set_coefficient(m, cplx{r.re01, r.im});
  }
  return out;
}

bool is_integral(const RingElement& e, double tol) {
  for (const auto& [m, c] : e.terms()) {
    if (std::abs(wrap_to_half(c.real())) > tol) return false;
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double mod_z_element_distance(const RingElement& a, const RingElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("mod-Z distance: dimension mismatch");
  double worst = 0.0;
  RingElement diff = a - b;
  for (const auto& [m, c] : diff.terms())
    worst = std::max(worst, std::hypot(wrap_to_half(c.real()), c.imag()));
  return worst;
}

FlatCharacter::FlatCharacter(int deg, RingElement v) : degree(deg), value(std::move(v)) {
  if (degree < 1 || degree % 2 == 0)
    throw InputError("flat character degree must be odd and positive");
  int vdeg = value.degree();
  if (vdeg >= 0 && vdeg != degree)
    throw InputError("flat character value has the wrong exterior degree");
  value = reduce_element_mod_z(value);
}

FlatCharacter FlatCharacter::zero(int n, int deg) { return FlatCharacter(deg, RingElement(n)); }

FlatCharacter character_product(const FlatCharacter& x, const FlatCharacter& y,
                                const RingElement& c_y) {
  int cdeg = c_y.degree();
  if (cdeg >= 0 && cdeg != y.degree + 1)
    throw InputError("character_product: integral class degree must be deg(y)+1");
  if (!is_integral(c_y)) throw InputError("character_product: c_y is not an integral class");
  RingElement prod = ring_mul(x.value, c_y);
  return FlatCharacter(x.degree + y.degree + 1, std::move(prod));
}

// ---------------------------------------------------------------------------

TotalClassExact::TotalClassExact(int n, int truncation) : n_(n) {
  if (truncation < 0) throw InputError("total class truncation must be nonnegative");
  entries_.assign(static_cast<std::size_t>(truncation), ExactRingElement(n));
}

TotalClassExact TotalClassExact::from_entries(int n, const ExactRingElement& c0,
                                              std::vector<ExactRingElement> higher) {
  ExactRingElement unit = ExactRingElement::monomial(n, 0, RationalComplex(1));
  if (!(c0 == unit)) throw InputError("total class: c0 must equal 1");
  TotalClassExact out(n, static_cast<int>(higher.size()));
  for (std::size_t k = 0; k < higher.size(); ++k)
    out.set_entry(static_cast<int>(k) + 1, std::move(higher[k]));
  return out;
}

const ExactRingElement& TotalClassExact::entry(int k) const {
  if (k < 1 || k > truncation()) throw InputError("total class entry out of range");
  return entries_[static_cast<std::size_t>(k) - 1];
}

void TotalClassExact::set_entry(int k, ExactRingElement e) {
  if (k < 1 || k > truncation()) throw InputError("total class entry out of range");
  if (e.dim() != n_) throw DimensionError("total class entry dimension mismatch");
  entries_[static_cast<std::size_t>(k) - 1] = std::move(e);
}

TotalClassExact total_mul(const TotalClassExact& a, const TotalClassExact& b) {
  if (a.dim() != b.dim()) throw DimensionError("total class product: dimension mismatch");
  int trunc = std::max(a.truncation(), b.truncation());
  TotalClassExact out(a.dim(), trunc);
  for (int k = 1; k <= trunc; ++k) {
    ExactRingElement acc(a.dim());
    if (k <= a.truncation()) acc += a.entry(k);
    if (k <= b.truncation()) acc += b.entry(k);
    for (int j = 1; j < k; ++j) {
      if (j > a.truncation() || k - j > b.truncation()) continue;
      acc += ring_mul(a.entry(j), b.entry(k - j));
    }
    out.set_entry(k, std::move(acc));
  }
  return out;
}

TotalClassExact segre_inverse(const TotalClassExact& c) {
  // s_k = -(c_k + sum_{j=1}^{k-1} c_j s_{k-j}); exact arithmetic.
  TotalClassExact s(c.dim(), c.truncation());
  for (int k = 1; k <= c.truncation(); ++k) {
    ExactRingElement acc = c.entry(k);
    for (int j = 1; j < k; ++j) acc += ring_mul(c.entry(j), s.entry(k - j));
    s.set_entry(k, -acc);
  }
  return s;
}

TotalClassExact difference_class(const TotalClassExact& c_f, const TotalClassExact& c_g) {
  return total_mul(c_f, segre_inverse(c_g));
}

// ---------------------------------------------------------------------------

TotalCharacterClass::TotalCharacterClass(int n, int truncation) : n_(n) {
  if (truncation < 1) throw InputError("character class truncation must be at least 1");
  entries_.reserve(static_cast<std::size_t>(truncation));
  for (int k = 1; k <= truncation; ++k) entries_.push_back(FlatCharacter::zero(n, 2 * k - 1));
}

const FlatCharacter& TotalCharacterClass::entry(int k) const {
  if (k < 1 || k > truncation()) throw InputError("character class entry out of range");
  return entries_[static_cast<std::size_t>(k) - 1];
}

void TotalCharacterClass::set_entry(int k, FlatCharacter e) {
  if (k < 1 || k > truncation()) throw InputError("character class entry out of range");
  if (e.degree != 2 * k - 1) throw InputError("character class entry has the wrong degree");
  if (e.value.dim() != n_) throw DimensionError("character class entry dimension mismatch");
  entries_[static_cast<std::size_t>(k) - 1] = std::move(e);
}

TotalCharacterClass total_mul(const TotalCharacterClass& a, const TotalCharacterClass& b) {
  if (a.dim() != b.dim()) throw DimensionError("character class product: dimension mismatch");
  int trunc = std::max(a.truncation(), b.truncation());
  TotalCharacterClass out(a.dim(), trunc);
  const RingElement zero_integral(a.dim());  // flat bundles over T^n: c(y) = 0
  for (int k = 1; k <= trunc; ++k) {
    RingElement acc(a.dim());
    if (k <= a.truncation()) acc += a.entry(k).value;
    if (k <= b.truncation()) acc += b.entry(k).value;
    for (int j = 1; j < k; ++j) {
      if (j > a.truncation() || k - j > b.truncation()) continue;
      FlatCharacter cross = character_product(a.entry(j), b.entry(k - j), zero_integral);
      acc += cross.value;
    }
    out.set_entry(k, FlatCharacter(2 * k - 1, std::move(acc)));
  }
  return out;
}

TotalCharacterClass segre_inverse(const TotalCharacterClass& c) {
  TotalCharacterClass s(c.dim(), c.truncation());
  const RingElement zero_integral(c.dim());
  for (int k = 1; k <= c.truncation(); ++k) {
    RingElement acc = c.entry(k).value;
    for (int j = 1; j < k; ++j) {
      FlatCharacter cross = character_product(c.entry(j), s.entry(k - j), zero_integral);
      acc += cross.value;
    }
    s.set_entry(k, FlatCharacter(2 * k - 1, -acc));
  }
  return s;
}

TotalCharacterClass difference_class(const TotalCharacterClass& c_f,
                                     const TotalCharacterClass& c_g) {
  return total_mul(c_f, segre_inverse(c_g));
}

// ---------------------------------------------------------------------------

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const CMatrix& m) {
  EMat out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

std::vector<std::vector<cplx>> character_vector(const FlatBundleClassData& b) {
  if (b.n < 1 || static_cast<int>(b.holonomy.size()) != b.n)
    throw InputError("flat bundle data needs one holonomy matrix per torus generator");
  for (const CMatrix& h : b.holonomy)
    if (h.rows != b.rank || h.cols != b.rank)
      throw DimensionError("holonomy matrix shape does not match the rank");

  double scale = 1.0;
  for (const CMatrix& h : b.holonomy) scale = std::max(scale, h.max_abs());
  HolonomyRep rep;
  rep.n = b.n;
  rep.block0 = b.holonomy;
  double comm = rep.max_commutator_residual();
  double tol = std::max(b.tolerance, 1e-12);
  if (comm > tol * scale * scale)
    throw NumericError("holonomy matrices do not commute: residual " + std::to_string(comm));

  // Common eigenbasis from a deterministic generic combination; a second
  // weight set covers unlucky degeneracies.
  const double golden = 0.6180339887498949;
  for (int attempt = 0; attempt < 2; ++attempt) {
    EMat mix = EMat::Zero(b.rank, b.rank);
    for (int k = 0; k < b.n; ++k) {
      double w = attempt == 0 ? 1.0 / (1.0 + golden * (k + 1))
                              : std::cos(1.0 + 2.0 * k) + 2.0;
      mix += w * to_eigen(b.holonomy[k]);
    }
    Eigen::ComplexEigenSolver<EMat> es(mix);
    if (es.info() != Eigen::Success) continue;
    EMat v = es.eigenvectors();
    Eigen::FullPivLU<EMat> lu(v);
    if (!lu.isInvertible()) continue;
    EMat vinv = lu.inverse();

    std::vector<std::vector<cplx>> alpha(static_cast<std::size_t>(b.rank),
                                         std::vector<cplx>(static_cast<std::size_t>(b.n)));
    bool ok = true;
    for (int k = 0; k < b.n && ok; ++k) {
      EMat d = vinv * to_eigen(b.holonomy[k]) * v;
      double off = 0.0;
      for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j)
          if (i != j) off = std::max(off, std::abs(d(i, j)));
      if (off > std::max(1e-9, tol) * std::max(1.0, scale)) {
        ok = false;
        break;
      }
      for (int j = 0; j < b.rank; ++j) {
        cplx lambda = d(j, j);
        if (std::abs(lambda) < 1e-12)
          throw NumericError("holonomy matrix is singular on axis " + std::to_string(k + 1));
        // lambda = exp(2*pi*i*alpha): alpha = log(lambda)/(2*pi*i).
        alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            cplx{std::arg(lambda) / kTwoPi, -std::log(std::abs(lambda)) / kTwoPi};
      }
    }
    if (!ok) continue;
    // Invariant: the exponentials reproduce the eigenvalues.
    for (int k = 0; k < b.n; ++k) {
      EMat d = vinv * to_eigen(b.holonomy[k]) * v;
      for (int j = 0; j < b.rank; ++j) {
        cplx a = alpha[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        cplx rebuilt = std::exp(cplx{0.0, kTwoPi} * a);
        if (std::abs(rebuilt - d(j, j)) > 1e-9 * std::max(1.0, scale))
          throw NumericError("character vector does not reproduce the holonomy eigenvalues");
      }
    }
    return alpha;
  }
  throw NumericError(
      "holonomy is not simultaneously diagonalizable; cannot split into flat line bundles");
}

TotalCharacterClass cs_classes_of_flat(const FlatBundleClassData& b, int truncation) {
  if (truncation < 1) truncation = std::max(1, (b.n + 1) / 2);
  std::vector<std::vector<cplx>> alpha = character_vector(b);
  TotalCharacterClass total(b.n, truncation);
  for (int j = 0; j < b.rank; ++j) {
    // Line-bundle factor 1 + c1(L_j); coefficient on e_k is -alpha_jk mod Z.
    TotalCharacterClass factor(b.n, truncation);
    RingElement c1(b.n);
    for (int k = 0; k < b.n; ++k)
      c1.set_coefficient(Mask{1} << k, -alpha[static_cast<std::size_t>(j)][k]);
    factor.set_entry(1, FlatCharacter(1, std::move(c1)));
    total = total_mul(total, factor);
  }
  return total;
}

TotalCharacterClass cs_product_formula(const TotalCharacterClass& c0,
                                       const TotalCharacterClass& c1, int truncation) {
  TotalCharacterClass diff = total_mul(c0, segre_inverse(c1));
  if (truncation >= 1 && truncation != diff.truncation()) {
    TotalCharacterClass out(diff.dim(), truncation);
    for (int k = 1; k <= std::min(truncation, diff.truncation()); ++k)
      out.set_entry(k, diff.entry(k));
    return out;
  }
  return diff;
}

TotalCharacterClass cs_of_morphism(const MorphismMeta& meta, const FlatBundleClassData& b0,
                                   const FlatBundleClassData& b1, int truncation) {
  if (b0.n != b1.n) throw DimensionError("cs_of_morphism: bundles live on different tori");
  if (meta.rank0 != b0.rank || meta.rank1 != b1.rank)
    throw DimensionError("cs_of_morphism: morphism ranks do not match the bundles");
  if (truncation < 1) truncation = std::max(1, (b0.n + 1) / 2);
  return cs_product_formula(cs_classes_of_flat(b0, truncation),
                            cs_classes_of_flat(b1, truncation), truncation);
}

BocksteinReport bockstein_lift_check(int n, int degree, const RingElement& integral_class,
                                     bool real_image_zero) {
  if (degree < 2 || degree % 2 != 0)
    throw InputError("bockstein_lift_check: degree must be even and at least 2");
  if (integral_class.dim() != n) throw DimensionError("bockstein_lift_check: dimension mismatch");
  int cdeg = integral_class.degree();
  if (cdeg >= 0 && cdeg != degree)
    throw InputError("bockstein_lift_check: class degree does not match");
  if (!is_integral(integral_class))
    throw InputError("bockstein_lift_check: coefficients are not integral");

  BocksteinReport report;
  report.ambiguity_degree = degree - 1;
  bool zero = true;
  for (const auto& [m, c] : integral_class.terms())
    if (std::abs(c.real()) > 1e-9 || std::abs(c.imag()) > 1e-9) zero = false;

  if (zero) {
    // Exactness: the lift exists and is unique up to the image of
    // H^{2k-1}(Z), the integral monomials one degree down.
    report.lift_exists = true;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask m = 0; m <= full; ++m)
      if (mask_degree(m) == degree - 1) report.ambiguity_lattice.push_back(m);
    return report;
  }
  report.lift_exists = false;
  report.reason = real_image_zero
                      ? "requires torsion: nonzero integral class with zero real image cannot "
                        "occur in the torsion-free torus model"
                      : "integral class has nonzero real image; no flat lift exists";
  return report;
}

}  // namespace scs
