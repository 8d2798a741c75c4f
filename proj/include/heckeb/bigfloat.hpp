#pragma once

#include <string>

#include "heckeb/ratfunc.hpp"

namespace heckeb {

// Arbitrary-precision complex number built on GMP floats.  Only the
// operations needed by the numeric splitting layer are provided: field
// arithmetic, absolute value, and principal square / fourth roots.
//
// Precision is carried per value (GMP semantics); mixed-precision arithmetic
// resolves to the destination's precision, so every constructor here takes an
// explicit bit count.
class BigComplex {
 public:
  BigComplex() : re_(0.0, 128), im_(0.0, 128) {}
  explicit BigComplex(int bits) : re_(0.0, bits), im_(0.0, bits) {}
  BigComplex(const mpf_class& re, const mpf_class& im) : re_(re), im_(im) {}
  static BigComplex from_rational(const Rational& x, int bits);
  static BigComplex from_rationals(const Rational& re, const Rational& im, int bits);

  const mpf_class& real() const { return re_; }
  const mpf_class& imag() const { return im_; }
  int bits() const { return static_cast<int>(re_.get_prec()); }

  bool is_exact_zero() const { return re_ == 0 && im_ == 0; }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  mpf_class abs() const;
  // Principal square root: branch cut along the negative real axis, result
  // in the closed right half plane (negative reals map to +i sqrt|x|).
  BigComplex sqrt_principal() const;
  // Principal fourth root = principal sqrt applied twice.
  BigComplex fourth_root_principal() const;

  std::string to_string(int digits = 30) const;

 private:
  mpf_class re_, im_;
};

mpf_class abs_value(const BigComplex& z);

// Exact rational evaluation of x at s, then conversion to a complex float of
// the given precision.
BigComplex eval_complex(const RatFunc& x, const Specialization& s, int bits);

// Principal roots of rational numbers (negative inputs give purely imaginary
// / rotated results per the principal branch).
BigComplex sqrt_principal(const Rational& x, int bits);
BigComplex fourth_root_principal(const Rational& x, int bits);

}  // namespace heckeb
