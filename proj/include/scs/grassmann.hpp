#pragma once

// Exact arithmetic in the supercommutative algebra C[t1,...,tq] with
// anticommuting generators. Elements are finite maps from increasing
// multi-indices to complex rationals; missing entries are zero.

#include <map>
#include <optional>
#include <string>

#include "scs/grading.hpp"
#include "scs/multi_index.hpp"
#include "scs/rational.hpp"

namespace scs {

// Upper bound on the generator count; coefficient storage is 2^q.
int max_generators();
void set_max_generators(int q);

class GrassmannElement {
 public:
  explicit GrassmannElement(int generator_count);

  static GrassmannElement scalar(int q, RationalComplex c);
  static GrassmannElement generator(int q, int index);  // 1-based
  static GrassmannElement monomial(int q, Mask m, RationalComplex c);

  int generator_count() const { return q_; }
  const std::map<Mask, RationalComplex>& coefficients() const { return coeff_; }

  bool is_zero() const { return coeff_.empty(); }
  RationalComplex coefficient(Mask m) const;
  void set_coefficient(Mask m, RationalComplex c);

  // Homogeneous-element predicate; nullopt for mixed-parity elements.
  // The zero element is homogeneous of either parity; Even is reported.
  std::optional<Parity> parity() const;
  bool has_parity(Parity p) const;

  // Projection onto the even / odd part.
  GrassmannElement parity_part(Parity p) const;

  GrassmannElement& operator+=(const GrassmannElement& b);
  GrassmannElement& operator-=(const GrassmannElement& b);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    return a += b;
  }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
    return a -= b;
  }
  friend GrassmannElement operator-(const GrassmannElement& a);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b);

  // Debug rendering, e.g. "3 + 2*t1^t2".
  std::string str() const;

 private:
  int q_;
  std::map<Mask, RationalComplex> coeff_;  // canonical: no zero entries stored
};

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b);
inline GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return grassmann_mul(a, b);
}
GrassmannElement operator*(const RationalComplex& c, const GrassmannElement& a);

// Coefficient of the empty multi-index (the underlying numeric value).
RationalComplex body(const GrassmannElement& a);

}  // namespace scs
