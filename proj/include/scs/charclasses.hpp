#pragma once

// Class-level calculus over H*(T^n): exterior-algebra ring elements, flat
// differential characters with C/Z coefficients, total class series with
// Segre inversion and the difference/product formulas, and the holonomy
// route to the secondary classes of flat bundles.
//
// The torus model is torsion-free: integral characteristic classes of flat
// bundles are zero, so products of positive-degree flat characters vanish.
// character_product still takes the integral class explicitly so a model
// with torsion can reuse the rule x.y = x cup c(y).

#include <string>
#include <vector>

#include "scs/cmatrix.hpp"
#include "scs/form_field.hpp"  // cplx
#include "scs/multi_index.hpp"
#include "scs/rational.hpp"
#include "scs/superconnection.hpp"  // ComplexModZ / reduce_mod_z

namespace scs {

namespace detail {
inline bool coeff_is_zero(const RationalComplex& c) { return c.is_zero(); }
inline bool coeff_is_zero(const cplx& c) { return c == cplx{}; }
}  // namespace detail

// Elements of the exterior algebra Lambda(e_1..e_n) with coefficients in C
// (closed-form level) or exact rationals (series identities).
template <class Coeff>
class ExteriorElement {
 public:
  explicit ExteriorElement(int n) : n_(n) {
    if (n < 0 || n > 30) throw InputError("exterior algebra dimension out of range");
  }

  static ExteriorElement monomial(int n, Mask m, Coeff c) {
    ExteriorElement e(n);
    e.set_coefficient(m, std::move(c));
    return e;
  }

  int dim() const { return n_; }
  const std::map<Mask, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void set_coefficient(Mask m, Coeff c) {
    if ((m >> n_) != 0) throw InputError("exterior monomial outside the algebra");
    if (detail::coeff_is_zero(c))
      terms_.erase(m);
    else
      terms_[m] = std::move(c);
  }

  // Homogeneous degree; -1 for zero, nullopt-like -2 for mixed.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int md = mask_degree(m);
      if (d == -1)
        d = md;
      else if (d != md)
        return -2;
    }
    return d;
  }

  ExteriorElement& operator+=(const ExteriorElement& b) {
    require_same(b);
    for (const auto& [m, c] : b.terms_) set_coefficient(m, coefficient(m) + c);
    return *this;
  }
  ExteriorElement& operator-=(const ExteriorElement& b) {
    require_same(b);
    for (const auto& [m, c] : b.terms_) set_coefficient(m, coefficient(m) - c);
    return *this;
  }
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator-(const ExteriorElement& a) {
    ExteriorElement out(a.n_);
    for (const auto& [m, c] : a.terms_) out.set_coefficient(m, -c);
    return out;
  }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const ExteriorElement& b) const {
    if (n_ != b.n_) throw DimensionError("exterior algebra dimension mismatch");
  }
  int n_;
  std::map<Mask, Coeff> terms_;
};

// Graded-commutative cup product with Koszul signs.
template <class Coeff>
ExteriorElement<Coeff> ring_mul(const ExteriorElement<Coeff>& a, const ExteriorElement<Coeff>& b) {
  if (a.dim() != b.dim()) throw DimensionError("ring_mul: dimension mismatch");
  ExteriorElement<Coeff> out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != 0) continue;
      Coeff term = ca * cb;
      if (merge_sign(ma, mb) < 0) term = -term;
      out.set_coefficient(ma | mb, out.coefficient(ma | mb) + term);
    }
  return out;
}

using RingElement = ExteriorElement<cplx>;
using ExactRingElement = ExteriorElement<RationalComplex>;

// Coefficientwise reduction of the real parts into [0,1).
RingElement reduce_element_mod_z(const RingElement& e);
// Integral-lattice membership: every coefficient within tol of an integer.
bool is_integral(const RingElement& e, double tol = 1e-9);
// Distance of a - b from the integral lattice (coefficientwise, circle metric).
double mod_z_element_distance(const RingElement& a, const RingElement& b);

// A flat differential character: an odd-degree class with C/Z coefficients
// and identically vanishing curvature form.
struct FlatCharacter {
  int degree = 1;  // odd
  RingElement value;

  FlatCharacter(int deg, RingElement v);
  static FlatCharacter zero(int n, int deg);
  bool is_zero() const { return value.is_zero(); }
};

// x . y = x cup c(y) reduced mod Z; c_y is the integral class of y, passed
// explicitly (zero in the torus model).
FlatCharacter character_product(const FlatCharacter& x, const FlatCharacter& y,
                                const RingElement& c_y);

// ---------------------------------------------------------------------------
// Total class series. Entry 0 is the unit and is implicit; entries run from
// 1 to the truncation degree.

class TotalClassExact {
 public:
  TotalClassExact(int n, int truncation);
  // c0 must be the unit; validated (errors: c0 != 1).
  static TotalClassExact from_entries(int n, const ExactRingElement& c0,
                                      std::vector<ExactRingElement> higher);

  int dim() const { return n_; }
  int truncation() const { return static_cast<int>(entries_.size()); }
  const ExactRingElement& entry(int k) const;  // 1-based
  void set_entry(int k, ExactRingElement e);

  friend bool operator==(const TotalClassExact& a, const TotalClassExact& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  std::vector<ExactRingElement> entries_;
};

TotalClassExact total_mul(const TotalClassExact& a, const TotalClassExact& b);
TotalClassExact segre_inverse(const TotalClassExact& c);
TotalClassExact difference_class(const TotalClassExact& c_f, const TotalClassExact& c_g);

// Character-level total class: entry k is a flat character of degree 2k-1.
class TotalCharacterClass {
 public:
  TotalCharacterClass(int n, int truncation);

  int dim() const { return n_; }
  int truncation() const { return static_cast<int>(entries_.size()); }
  const FlatCharacter& entry(int k) const;
  void set_entry(int k, FlatCharacter e);

 private:
  int n_;
  std::vector<FlatCharacter> entries_;
};

TotalCharacterClass total_mul(const TotalCharacterClass& a, const TotalCharacterClass& b);
TotalCharacterClass segre_inverse(const TotalCharacterClass& c);
TotalCharacterClass difference_class(const TotalCharacterClass& c_f,
                                     const TotalCharacterClass& c_g);

// ---------------------------------------------------------------------------
// Flat bundles presented by holonomy.

struct FlatBundleClassData {
  int n = 0;     // torus dimension
  int rank = 0;  // one block
  std::vector<CMatrix> holonomy;  // n generators
  double tolerance = 1e-9;
};

// Logs of the joint eigenvalues: alpha[j][k] with eigenvalue_j(hol_k) =
// exp(2*pi*i*alpha[j][k]). Throws NumericError when the family is not
// commuting / not simultaneously diagonalizable.
std::vector<std::vector<cplx>> character_vector(const FlatBundleClassData& b);

// Total secondary class by splitting into flat line bundles and taking the
// Whitney product. The fixed sign convention: a line bundle with holonomy
// exp(2*pi*i*a) on axis k has first class -a mod Z, matching transgress_c1
// of a connection with that holonomy.
TotalCharacterClass cs_classes_of_flat(const FlatBundleClassData& b, int truncation = 0);

// c_hat_n(E, D0 + L) = sum_{p+q=n} c_hat_p(E0) . s_hat_q(E1).
TotalCharacterClass cs_product_formula(const TotalCharacterClass& c0,
                                       const TotalCharacterClass& c1, int truncation);

struct MorphismMeta {
  int rank0 = 0;
  int rank1 = 0;
};

// Classes of a morphism u : E0 -> E1 between flat bundles; u itself only
// enters through its ranks (the formula does not depend on it).
TotalCharacterClass cs_of_morphism(const MorphismMeta& meta, const FlatBundleClassData& b0,
                                   const FlatBundleClassData& b1, int truncation = 0);

// ---------------------------------------------------------------------------
// Bockstein diagnostics in the torsion-free torus model.

struct BocksteinReport {
  bool lift_exists = false;
  std::string reason;
  int ambiguity_degree = 0;          // 2k-1
  std::vector<Mask> ambiguity_lattice;  // integral monomial basis
};

BocksteinReport bockstein_lift_check(int n, int degree, const RingElement& integral_class,
                                     bool real_image_zero);

}  // namespace scs
