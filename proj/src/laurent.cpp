#include "heckeb/laurent.hpp"

#include <cctype>
#include <sstream>

namespace heckeb {

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return 1;
  if (x == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return 0;
  }
  Rational base = e < 0 ? Rational(1) / x : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc = 1;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

void LaurentPoly::add_term(const ExpPair& e, const Rational& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

bool LaurentPoly::is_one() const {
  return t_.size() == 1 && t_.begin()->first == ExpPair{0, 0} && t_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == ExpPair{0, 0});
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [e, c] : t_)
    if (c.get_den() != 1) return false;
  return true;
}

ExpPair LaurentPoly::min_exponents() const {
  if (t_.empty()) throw std::logic_error("min_exponents of zero polynomial");
  int mu = t_.begin()->first.first, mq = t_.begin()->first.second;
  for (const auto& [e, c] : t_) {
    if (e.first < mu) mu = e.first;
    if (e.second < mq) mq = e.second;
  }
  return {mu, mq};
}

ExpPair LaurentPoly::max_exponents() const {
  if (t_.empty()) throw std::logic_error("max_exponents of zero polynomial");
  int mu = t_.begin()->first.first, mq = t_.begin()->first.second;
  for (const auto& [e, c] : t_) {
    if (e.first > mu) mu = e.first;
    if (e.second > mq) mq = e.second;
  }
  return {mu, mq};
}

ExpPair LaurentPoly::leading_exponent() const {
  if (t_.empty()) throw std::logic_error("leading_exponent of zero polynomial");
  return t_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (t_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return t_.rbegin()->second;
}

Rational LaurentPoly::coeff(int eu, int eq) const {
  auto it = t_.find({eu, eq});
  return it == t_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int du, int dq) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(ExpPair{e.first + du, e.second + dq}, c);
  return r;
}

Rational LaurentPoly::evaluate(const Rational& u0, const Rational& q0) const {
  Rational acc = 0;
  for (const auto& [e, c] : t_)
    acc += c * pow_rational(u0, e.first) * pow_rational(q0, e.second);
  return acc;
}

LaurentPoly LaurentPoly::subst_u(const Rational& u0) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_)
    r.add_term({0, e.second}, c * pow_rational(u0, e.first));
  return r;
}

bool LaurentPoly::depends_on_u() const {
  for (const auto& [e, c] : t_)
    if (e.first != 0) return true;
  return false;
}

bool LaurentPoly::depends_on_q() const {
  for (const auto& [e, c] : t_)
    if (e.second != 0) return true;
  return false;
}

namespace {

void append_var(std::string& out, const char* name, int e, bool& lead) {
  if (e == 0) return;
  if (!lead) out += "*";
  lead = false;
  out += name;
  if (e != 1) {
    out += "^";
    out += std::to_string(e);
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending lexicographic exponent order.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool lead = true;
    if (abs != 1 || (e.first == 0 && e.second == 0)) {
      out += abs.get_str();
      lead = false;
    }
    append_var(out, "u", e.first, lead);
    append_var(out, "q", e.second, lead);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + why);
  }
};

long parse_long(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  std::size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == digits) c.fail("expected integer");
  return std::stol(c.s.substr(start, c.i - start));
}

// term := [integer [ '/' integer ]] [ '*'? var ] ... ; var := ('u'|'q') ['^' int]
LaurentPoly parse_term(Cursor& c, int sign) {
  Rational coef = sign;
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    long num = parse_long(c);
    Rational r(num);
    if (c.peek() == '/') {
      ++c.i;
      long den = parse_long(c);
      if (den == 0) c.fail("zero denominator in coefficient");
      r = Rational(num, den);
      r.canonicalize();
    }
    coef *= r;
    saw_anything = true;
  }
  int eu = 0, eq = 0;
  while (true) {
    char p = c.peek();
    if (p == '*') {
      ++c.i;
      p = c.peek();
    }
    if (p != 'u' && p != 'q') break;
    ++c.i;
    int e = 1;
    if (c.peek() == '^') {
      ++c.i;
      e = static_cast<int>(parse_long(c));
    }
    if (p == 'u')
      eu += e;
    else
      eq += e;
    saw_anything = true;
  }
  if (!saw_anything) c.fail("expected term");
  return LaurentPoly::monomial(coef, eu, eq);
}

LaurentPoly parse_poly(Cursor& c) {
  LaurentPoly acc;
  int sign = 1;
  if (c.peek() == '+') ++c.i;
  if (c.peek() == '-') {
    sign = -1;
    ++c.i;
  }
  acc += parse_term(c, sign);
  while (!c.done()) {
    char p = c.peek();
    if (p == '+')
      sign = 1;
    else if (p == '-')
      sign = -1;
    else
      break;
    ++c.i;
    acc += parse_term(c, sign);
  }
  return acc;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
  Cursor c{s};
  if (c.done()) throw std::invalid_argument("empty polynomial string");
  if (c.peek() == '0') {
    std::size_t save = c.i;
    ++c.i;
    if (c.done()) return LaurentPoly();
    c.i = save;
  }
  LaurentPoly p = parse_poly(c);
  if (!c.done()) c.fail("trailing characters");
  return p;
}

}  // namespace heckeb
