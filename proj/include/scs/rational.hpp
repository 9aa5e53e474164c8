#pragma once

// Exact complex-rational scalars. All algebraic identities in the Grassmann /
// supermatrix layer are checked bit-exactly, so the scalar field is Q(i)
// rather than floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "scs/errors.hpp"

namespace scs {

using Rational = boost::multiprecision::cpp_rational;

struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RationalComplex(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(long r, long i) : re(r), im(i) {}

  static RationalComplex i() { return RationalComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  RationalComplex conj() const { return {re, -im}; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational d = b.re * b.re + b.im * b.im;
    if (d == 0) throw NumericError("division by zero complex rational");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  RationalComplex& operator+=(const RationalComplex& b) { return *this = *this + b; }
  RationalComplex& operator-=(const RationalComplex& b) { return *this = *this - b; }
  RationalComplex& operator*=(const RationalComplex& b) { return *this = *this * b; }

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  std::string str() const;
};

// Renders "3", "-1/2", "2i", "1+2i", "(1/2)-(3/4)i" style strings.
std::string to_string(const RationalComplex& c);

}  // namespace scs
