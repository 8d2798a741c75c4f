#include "heckeb/ratfunc.hpp"

#include <algorithm>

namespace heckeb {

void Specialization::validate() const {
  auto bad = [](const std::string& why) { throw std::invalid_argument("specialization: " + why); };
  if (q0 == 0 || q0 == 1 || q0 == -1) bad("q0 must avoid {0, 1, -1}");
  if (u0 == 0) bad("u0 must be nonzero");
  int kmax = guard_n + 2;
  Rational qk = 1;
  std::vector<Rational> ys = {Rational(1), Rational(-1), u0, -u0, 1 / u0, -1 / u0};
  // k = 0: only the cross-component values -u0, -1/u0 can occur there.
  if (1 + u0 == 0 || 1 + 1 / u0 == 0) bad("1 + u0^(+-1) must be nonzero");
  for (int k = 1; k <= kmax; ++k) {
    qk *= q0;
    if (qk == 1 || qk == -1) bad("q0^k hits +-1 at k=" + std::to_string(k));
    for (const Rational& y : ys)
      if (1 - qk * y == 0)
        bad("1 - q0^" + std::to_string(k) + " * y vanishes for y=" + Rational(y).get_str());
  }
}

// ---------------------------------------------------------------------------
// Dense integer polynomial helpers for the gcd computation.  A bivariate
// polynomial is a vector over u-degree whose entries are dense q-coefficient
// vectors.
namespace {

using QP = std::vector<Integer>;  // dense in q, no trailing zeros
using UP = std::vector<QP>;       // dense in u, entries q-polys, no trailing zeros

void qp_trim(QP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool qp_zero(const QP& p) { return p.empty(); }

QP qp_neg(QP p) {
  for (auto& c : p) c = -c;
  return p;
}

QP qp_add(const QP& a, const QP& b) {
  QP r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qp_trim(r);
  return r;
}

QP qp_mul(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

QP qp_scale(const QP& a, const Integer& c) {
  if (c == 0) return {};
  QP r = a;
  for (auto& x : r) x *= c;
  return r;
}

Integer qp_content(const QP& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QP qp_divexact_int(const QP& a, const Integer& c) {
  QP r = a;
  for (auto& x : r) {
    Integer t;
    mpz_divexact(t.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    x = t;
  }
  return r;
}

// Primitive PRS gcd in Z[q].
QP qp_gcd(QP a, QP b) {
  qp_trim(a);
  qp_trim(b);
  if (qp_zero(a)) std::swap(a, b);
  if (qp_zero(b)) {
    if (qp_zero(a)) return {};
    Integer c = qp_content(a);
    QP r = qp_divexact_int(a, c);
    if (r.back() < 0) r = qp_neg(r);
    return r;
  }
  Integer ca = qp_content(a), cb = qp_content(b);
  Integer cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = qp_divexact_int(a, ca);
  b = qp_divexact_int(b, cb);
  while (!qp_zero(b)) {
    // pseudo-remainder of a by b
    QP r = a;
    while (r.size() >= b.size() && !qp_zero(r)) {
      std::size_t before = r.size();
      Integer lead = r.back();
      std::size_t shift = r.size() - b.size();
      QP t = qp_scale(r, b.back());
      QP s(shift, Integer(0));
      for (const auto& c : b) s.push_back(c * lead);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = -s[i];
      r = qp_add(t, s);
      qp_trim(r);
      if (r.size() >= before) throw std::logic_error("pseudo-division stalled");
    }
    a = b;
    b = r;
    if (!qp_zero(b)) {
      Integer c = qp_content(b);
      b = qp_divexact_int(b, c);
    }
  }
  if (a.back() < 0) a = qp_neg(a);
  QP g = qp_mul(a, QP{cg});
  return g;
}

void up_trim(UP& p) {
  while (!p.empty() && qp_zero(p.back())) p.pop_back();
}

bool up_zero(const UP& p) { return p.empty(); }

UP up_mul_qp(const UP& a, const QP& c) {
  UP r = a;
  for (auto& e : r) e = qp_mul(e, c);
  up_trim(r);
  return r;
}

UP up_sub(const UP& a, const UP& b) {
  UP r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = qp_add(r[i], qp_neg(b[i]));
  up_trim(r);
  return r;
}

// content in Z[q] of a u-poly
QP up_content(const UP& a) {
  QP g;
  for (const auto& e : a) g = qp_gcd(g, e);
  return g;
}

QP qp_divexact(const QP& a, const QP& b);

UP up_divexact_qp(const UP& a, const QP& c) {
  UP r = a;
  for (auto& e : r) e = qp_divexact(e, c);
  return r;
}

// exact division in Z[q]; throws on failure
QP qp_divexact(const QP& a, const QP& b) {
  if (qp_zero(b)) throw std::logic_error("division by zero q-poly");
  if (qp_zero(a)) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact q-poly division");
  QP r = a;
  QP q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    if (r.size() < b.size() + k) continue;
    if (r.size() != b.size() + k) throw std::logic_error("inexact q-poly division");
    Integer qc;
    Integer rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    if (rem != 0) throw std::logic_error("inexact q-poly division");
    q[k] = qc;
    QP s(k, Integer(0));
    for (const auto& c : b) s.push_back(c * qc);
    r = qp_add(r, qp_neg(s));
    qp_trim(r);
  }
  if (!qp_zero(r)) throw std::logic_error("inexact q-poly division");
  qp_trim(q);
  return q;
}

// Primitive PRS gcd in (Z[q])[u].
UP up_gcd(UP a, UP b) {
  up_trim(a);
  up_trim(b);
  if (up_zero(a)) std::swap(a, b);
  if (up_zero(b)) {
    if (up_zero(a)) return {};
    QP c = up_content(a);
    return up_divexact_qp(a, c);
  }
  QP ca = up_content(a), cb = up_content(b);
  QP cg = qp_gcd(ca, cb);
  a = up_divexact_qp(a, ca);
  b = up_divexact_qp(b, cb);
  while (!up_zero(b)) {
    UP r = a;
    while (r.size() >= b.size() && !up_zero(r)) {
      std::size_t before = r.size();
      QP lead = r.back();
      std::size_t shift = r.size() - b.size();
      UP t = up_mul_qp(r, b.back());
      UP s(shift);
      for (const auto& e : b) s.push_back(qp_mul(e, lead));
      r = up_sub(t, s);
      if (r.size() >= before) throw std::logic_error("pseudo-division stalled");
    }
    a = b;
    b = r;
    if (!up_zero(b)) {
      QP c = up_content(b);
      b = up_divexact_qp(b, c);
    }
  }
  QP c = up_content(a);
  a = up_divexact_qp(a, c);
  return up_mul_qp(a, cg);
}

UP to_up(const LaurentPoly& p) {
  auto [mu, mq] = p.is_zero() ? ExpPair{0, 0} : p.min_exponents();
  if (mu < 0 || mq < 0) throw std::logic_error("to_up needs an ordinary polynomial");
  UP r;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw std::logic_error("to_up needs integer coefficients");
    std::size_t du = static_cast<std::size_t>(e.first);
    std::size_t dq = static_cast<std::size_t>(e.second);
    if (r.size() <= du) r.resize(du + 1);
    if (r[du].size() <= dq) r[du].resize(dq + 1, Integer(0));
    r[du][dq] = c.get_num();
  }
  for (auto& e : r) qp_trim(e);
  up_trim(r);
  return r;
}

LaurentPoly from_up(const UP& p) {
  LaurentPoly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        r += LaurentPoly::monomial(Rational(p[i][j]), static_cast<int>(i), static_cast<int>(j));
  return r;
}

// rational content: positive c with p = c * (primitive integer poly)
Rational rational_content(const LaurentPoly& p) {
  Integer gnum = 0, lden = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(gnum, lden);
  r.canonicalize();
  return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  UP g = up_gcd(to_up(a), to_up(b));
  LaurentPoly r = from_up(g);
  if (!r.is_zero() && r.leading_coeff() < 0) r = -r;
  return r;
}

LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("exact division by zero");
  LaurentPoly r = a, q;
  const ExpPair eb = b.leading_exponent();
  const Rational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    ExpPair er = r.leading_exponent();
    ExpPair e{er.first - eb.first, er.second - eb.second};
    LaurentPoly t = LaurentPoly::monomial(r.leading_coeff() / cb, e.first, e.second);
    q += t;
    r -= t * b;
    if (!r.is_zero() && !(r.leading_exponent() < er))
      throw std::logic_error("inexact polynomial division");
  }
  return q;
}

RatFunc::RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(1) { canonicalize(); }

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Shift both parts by the same monomial so the denominator becomes an
  // ordinary polynomial with per-variable minimum exponents (0,0).
  ExpPair md = den_.min_exponents();
  LaurentPoly d = den_.shifted(-md.first, -md.second);
  LaurentPoly n = num_.shifted(-md.first, -md.second);
  // Split the numerator into monomial shift times ordinary part.
  ExpPair mn = n.min_exponents();
  LaurentPoly n0 = n.shifted(-mn.first, -mn.second);
  // Integer-primitive parts.
  Rational cn = rational_content(n0);
  Rational cd = rational_content(d);
  LaurentPoly ni = n0.scaled(1 / cn);
  LaurentPoly di = d.scaled(1 / cd);
  LaurentPoly g = poly_gcd(ni, di);
  if (!g.is_one()) {
    ni = poly_divide_exact(ni, g);
    di = poly_divide_exact(di, g);
  }
  // Fold the rational content back in while keeping integer coefficients:
  // cn/cd = p/r with p, r coprime integers; p joins the numerator, r the
  // denominator, so the fraction stays reduced.
  Rational c = cn / cd;
  ni = ni.scaled(Rational(c.get_num()));
  di = di.scaled(Rational(c.get_den()));
  if (di.leading_coeff() < 0) {
    ni = -ni;
    di = -di;
  }
  num_ = ni.shifted(mn.first, mn.second);
  den_ = di;
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant");
  if (num_.is_zero()) return 0;
  return num_.terms().begin()->second;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(1l);
  RatFunc base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RatFunc acc(1l);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rational RatFunc::evaluate(const Rational& u0, const Rational& q0) const {
  Rational d = den_.evaluate(u0, q0);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(u0, q0) / d;
}

RatFunc RatFunc::subst_u(const Rational& u0) const {
  LaurentPoly d = den_.subst_u(u0);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at u substitution");
  return RatFunc(num_.subst_u(u0), d);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
  // Either "poly" or "(poly)/(poly)".
  auto strip = [](const std::string& x) {
    std::size_t a = x.find_first_not_of(" \t");
    std::size_t b = x.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return x.substr(a, b - a + 1);
  };
  std::string t = strip(s);
  if (!t.empty() && t.front() == '(') {
    // find the matching close paren for the leading open paren
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') {
        --depth;
        if (depth == 0) {
          close = i;
          break;
        }
      }
    }
    if (close != std::string::npos) {
      std::string rest = strip(t.substr(close + 1));
      if (!rest.empty() && rest.front() == '/') {
        std::string denpart = strip(rest.substr(1));
        if (denpart.size() >= 2 && denpart.front() == '(' && denpart.back() == ')') {
          LaurentPoly n = LaurentPoly::parse(t.substr(1, close - 1));
          LaurentPoly d = LaurentPoly::parse(denpart.substr(1, denpart.size() - 2));
          return RatFunc(n, d);
        }
        throw std::invalid_argument("malformed rational function string");
      }
      if (rest.empty() && close == t.size() - 1)
        return RatFunc(LaurentPoly::parse(t.substr(1, close - 1)));
    }
  }
  return RatFunc(LaurentPoly::parse(t));
}

}  // namespace heckeb
