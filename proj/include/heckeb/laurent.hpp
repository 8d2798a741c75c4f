#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace heckeb {

using Rational = mpq_class;
using Integer = mpz_class;

// x^e for rational x, integer e (negative allowed, x != 0 then).
Rational pow_rational(const Rational& x, long e);

// Exponent pair (e_u, e_q), compared lexicographically (u before q).
using ExpPair = std::pair<int, int>;

// Laurent polynomial in u and q with rational coefficients.
// Invariant: the term map holds no zero coefficients; the zero polynomial
// is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { add_term({0, 0}, Rational(c)); }
  explicit LaurentPoly(const Rational& c) { add_term({0, 0}, c); }

  static LaurentPoly monomial(const Rational& c, int eu, int eq) {
    LaurentPoly p;
    p.add_term({eu, eq}, c);
    return p;
  }
  static LaurentPoly var_u() { return monomial(1, 1, 0); }
  static LaurentPoly var_q() { return monomial(1, 0, 1); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const;  // zero or a single (0,0) term
  // True when the polynomial is a single term.
  bool is_monomial() const { return t_.size() == 1; }
  bool has_integer_coeffs() const;
  std::size_t term_count() const { return t_.size(); }

  const std::map<ExpPair, Rational>& terms() const { return t_; }

  // Per-variable minimum/maximum exponents over all terms.  Pre: nonzero.
  ExpPair min_exponents() const;
  ExpPair max_exponents() const;
  // Lexicographically greatest exponent pair and its coefficient.  Pre: nonzero.
  ExpPair leading_exponent() const;
  const Rational& leading_coeff() const;
  Rational coeff(int eu, int eq) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& c) const;

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by u^du q^dq.
  LaurentPoly shifted(int du, int dq) const;

  // Full evaluation.  Negative exponents require the corresponding value
  // to be nonzero (throws std::domain_error otherwise).
  Rational evaluate(const Rational& u0, const Rational& q0) const;
  // Partial evaluation u := u0; result is a Laurent polynomial in q alone.
  LaurentPoly subst_u(const Rational& u0) const;

  bool depends_on_u() const;
  bool depends_on_q() const;

  // Text form: terms in descending lexicographic exponent order, e.g.
  //   "2*u^2*q - 3*q^-1 + 1".  Coefficients may be rational ("1/2*u").
  std::string to_string() const;
  // Inverse of to_string (also accepts redundant '+'/whitespace).
  static LaurentPoly parse(const std::string& s);

 private:
  std::map<ExpPair, Rational> t_;
  void add_term(const ExpPair& e, const Rational& c);
  friend class RatFunc;
};

}  // namespace heckeb
