#include "heckeb/bigfloat.hpp"

#include <sstream>

namespace heckeb {

namespace {

mpf_class f_sqrt(const mpf_class& x) {
  mpf_class r(0.0, x.get_prec());
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return r;
}

}  // namespace

BigComplex BigComplex::from_rational(const Rational& x, int bits) {
  mpf_class re(0.0, bits);
  mpf_set_q(re.get_mpf_t(), x.get_mpq_t());
  return BigComplex(re, mpf_class(0.0, bits));
}

BigComplex BigComplex::from_rationals(const Rational& re, const Rational& im, int bits) {
  mpf_class r(0.0, bits), i(0.0, bits);
  mpf_set_q(r.get_mpf_t(), re.get_mpq_t());
  mpf_set_q(i.get_mpf_t(), im.get_mpq_t());
  return BigComplex(r, i);
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  mpf_class d = b.re_ * b.re_ + b.im_ * b.im_;
  if (d == 0) throw std::domain_error("complex division by zero");
  return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

mpf_class BigComplex::abs() const {
  if (im_ == 0) return re_ >= 0 ? re_ : mpf_class(-re_);
  if (re_ == 0) return im_ >= 0 ? im_ : mpf_class(-im_);
  return f_sqrt(mpf_class(re_ * re_ + im_ * im_));
}

mpf_class abs_value(const BigComplex& z) { return z.abs(); }

BigComplex BigComplex::sqrt_principal() const {
  if (im_ == 0) {
    if (re_ >= 0) return BigComplex(f_sqrt(re_), mpf_class(0.0, re_.get_prec()));
    return BigComplex(mpf_class(0.0, re_.get_prec()), f_sqrt(mpf_class(-re_)));
  }
  // gamma = sqrt((|z| + re)/2), result = gamma + i * im/(2 gamma); the sign
  // of the imaginary part follows im, which is the principal branch.
  mpf_class r = abs();
  mpf_class gamma = f_sqrt(mpf_class((r + re_) / 2));
  if (gamma == 0) throw std::domain_error("sqrt branch degenerate");
  return BigComplex(gamma, im_ / (2 * gamma));
}

BigComplex BigComplex::fourth_root_principal() const {
  return sqrt_principal().sqrt_principal();
}

std::string BigComplex::to_string(int digits) const {
  mp_exp_t er, ei;
  std::string sr = re_.get_str(er, 10, digits);
  std::string si = im_.get_str(ei, 10, digits);
  std::ostringstream os;
  auto fmt = [](const std::string& s, mp_exp_t e) {
    if (s.empty()) return std::string("0");
    std::string digits_only = s[0] == '-' ? s.substr(1) : s;
    std::string out = (s[0] == '-' ? "-" : "");
    out += "0." + digits_only + "e" + std::to_string(e);
    return out;
  };
  os << fmt(sr, er);
  if (!(im_ == 0)) os << (im_ >= 0 ? " + " : " - ") << fmt(si[0] == '-' ? si.substr(1) : si, ei) << "i";
  return os.str();
}

BigComplex eval_complex(const RatFunc& x, const Specialization& s, int bits) {
  return BigComplex::from_rational(x.specialize(s), bits);
}

BigComplex sqrt_principal(const Rational& x, int bits) {
  return BigComplex::from_rational(x, bits).sqrt_principal();
}

BigComplex fourth_root_principal(const Rational& x, int bits) {
  return BigComplex::from_rational(x, bits).fourth_root_principal();
}

}  // namespace heckeb
