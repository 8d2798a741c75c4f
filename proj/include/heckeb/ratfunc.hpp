#pragma once

#include <string>
#include <vector>

#include "heckeb/laurent.hpp"

namespace heckeb {

// Evaluation point for the two parameters.  validate() enforces the
// genericity guards needed up to rank `guard_n`:
//   q0 not in {0, 1, -1} and q0^k != +-1 for 1 <= k <= guard_n + 2;
//   u0 != 0;
//   1 - q0^k * y != 0 for y in {+-1, +-u0, +-1/u0} and 0 <= k <= guard_n + 2
//   (k = 0 only for the values y that actually occur as cross-component
//   ratios, namely -u0 and -1/u0).
struct Specialization {
  Rational u0 = Rational(1);
  Rational q0 = Rational(5, 7);
  int guard_n = 8;

  void validate() const;  // throws std::invalid_argument on violation
};

// Rational function in u and q, kept in a canonical reduced form:
//  - the zero element is 0/1;
//  - the denominator is an ordinary polynomial (per-variable minimum
//    exponents (0,0)) with integer coefficients whose lexicographically
//    leading coefficient (u before q) is positive;
//  - the numerator has integer coefficients and shares no factor (integer or
//    polynomial) with the denominator; any monomial unit u^a q^b sits in the
//    numerator, whose exponents may therefore be negative.
// Equality of canonical forms is structural equality of both parts.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(const Rational& c);
  explicit RatFunc(const LaurentPoly& num) : num_(num), den_(1) { canonicalize(); }
  RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    canonicalize();
  }

  static RatFunc var_u() { return RatFunc(LaurentPoly::var_u()); }
  static RatFunc var_q() { return RatFunc(LaurentPoly::var_q()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  // Pre: is_constant().
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc inverse() const;  // throws std::domain_error on zero
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc pow(long e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Full evaluation at a point; throws std::domain_error if the denominator
  // vanishes there.
  Rational evaluate(const Rational& u0, const Rational& q0) const;
  Rational specialize(const Specialization& s) const { return evaluate(s.u0, s.q0); }
  // Partial evaluation u := u0; throws if the denominator collapses to zero.
  RatFunc subst_u(const Rational& u0) const;

  bool depends_on_u() const { return num_.depends_on_u() || den_.depends_on_u(); }

  // "num" or "(num)/(den)"; both parts have integer coefficients.
  std::string to_string() const;
  static RatFunc parse(const std::string& s);

 private:
  LaurentPoly num_, den_;
  void canonicalize();
};

// gcd of two integer-coefficient ordinary polynomials (min exponents (0,0)),
// primitive with positive lexicographically-leading coefficient.  Exposed for
// tests.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact division; throws std::logic_error when b does not divide a.
LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace heckeb
