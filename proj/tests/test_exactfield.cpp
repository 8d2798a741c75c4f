#include "doctest.h"
#include "heckeb/bigfloat.hpp"
#include "heckeb/matrix.hpp"
#include "heckeb/ratfunc.hpp"

using namespace heckeb;

namespace {

RatFunc U() { return RatFunc::var_u(); }
RatFunc Q() { return RatFunc::var_q(); }

}  // namespace

TEST_SUITE("exactfield") {
  TEST_CASE("laurent basics") {
    LaurentPoly p = LaurentPoly::var_u() + LaurentPoly(1);
    LaurentPoly q = LaurentPoly::var_u() - LaurentPoly(1);
    CHECK((p * q).to_string() == "u^2 - 1");
    CHECK(p.term_count() == 2);
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly::monomial(Rational(1), -1, 0).to_string() == "u^-1");
    LaurentPoly m = LaurentPoly::monomial(Rational(2), 2, 1) -
                    LaurentPoly::monomial(Rational(3), 0, -1) + LaurentPoly(1);
    CHECK(m.to_string() == "2*u^2*q + 1 - 3*q^-1");
    CHECK(m.evaluate(2, 3) == Rational(2 * 4 * 3) + 1 - Rational(3, 3));
    CHECK(m.min_exponents() == ExpPair{0, -1});
    CHECK(m.max_exponents() == ExpPair{2, 1});
    CHECK(m.leading_exponent() == ExpPair{2, 1});
  }

  TEST_CASE("laurent parse round trip") {
    for (const char* s : {"0", "1", "-1", "u", "-u", "q^-2", "2*u^2*q + 1 - 3*q^-1",
                          "1/2*u - 3/4", "u^3 - u^-3", "-5*u*q^2 + 7*q - 2"}) {
      LaurentPoly p = LaurentPoly::parse(s);
      CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK(LaurentPoly::parse(" u + 1 ") == LaurentPoly::parse("1 + u"));
    CHECK(LaurentPoly::parse("u*u*q") == LaurentPoly::monomial(Rational(1), 2, 1));
    CHECK_THROWS_AS(LaurentPoly::parse("u +"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("x"), std::invalid_argument);
  }

  TEST_CASE("laurent evaluation guards") {
    LaurentPoly p = LaurentPoly::monomial(Rational(1), -1, 0);
    CHECK_THROWS_AS(p.evaluate(0, 1), std::domain_error);
    CHECK(p.evaluate(Rational(1, 2), 7) == 2);
    LaurentPoly s = p.subst_u(Rational(1, 3));
    CHECK(s.is_constant());
    CHECK(s.evaluate(0, 0) == 3);
  }

  TEST_CASE("poly gcd and exact division") {
    LaurentPoly u = LaurentPoly::var_u(), q = LaurentPoly::var_q(), one(1);
    LaurentPoly a = (u + one) * (u - one);
    CHECK(poly_gcd(a, u + one) == u + one);
    // Content is included in the gcd.
    LaurentPoly two_u_plus_2 = (u + one).scaled(2);
    LaurentPoly four_a = a.scaled(4);
    CHECK(poly_gcd(two_u_plus_2, four_a) == two_u_plus_2);
    // Bivariate: gcd picks up factors in both variables.
    LaurentPoly f = (u * q + one) * (q + one);
    LaurentPoly g = (u * q + one) * (q - one);
    CHECK(poly_gcd(f, g) == u * q + one);
    CHECK(poly_divide_exact(f, u * q + one) == q + one);
    CHECK_THROWS_AS(poly_divide_exact(u * q + one, q + one), std::logic_error);
    // Sign normalization: positive lexicographically-leading coefficient.
    CHECK(poly_gcd(-(u + one), -(u * u - one)) == u + one);
  }

  TEST_CASE("ratfunc canonical form") {
    RatFunc x((LaurentPoly::var_u() * LaurentPoly::var_u()) - LaurentPoly(1),
              LaurentPoly::var_u() + LaurentPoly(1));
    CHECK(x == U() - RatFunc(1l));
    CHECK(x.den().is_one());

    // Rational content splits between numerator and denominator.
    RatFunc half(Rational(1, 2));
    CHECK(half.num().to_string() == "1");
    CHECK(half.den().to_string() == "2");

    RatFunc y((LaurentPoly::var_u() + LaurentPoly(1)).scaled(2), LaurentPoly(4));
    CHECK(y.num().to_string() == "u + 1");
    CHECK(y.den().to_string() == "2");

    // Monomial units live in the numerator.
    RatFunc inv_u(LaurentPoly(1), LaurentPoly::var_u());
    CHECK(inv_u.num().to_string() == "u^-1");
    CHECK(inv_u.den().is_one());

    // Denominator sign normalization.
    RatFunc z(LaurentPoly(1), LaurentPoly(0) - LaurentPoly::var_q() - LaurentPoly(1));
    CHECK(z.den().to_string() == "q + 1");
    CHECK(z.num().to_string() == "-1");

    // Same value built two ways gives identical parts.
    RatFunc a = (U() * U() - RatFunc(1l)) / (U() * Q() + Q());
    RatFunc b = (U() - RatFunc(1l)) / Q();
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
  }

  TEST_CASE("ratfunc field arithmetic") {
    RatFunc u = U(), q = Q();
    RatFunc x = (u + q) / (u - q);
    CHECK(x * x.inverse() == RatFunc(1l));
    CHECK(x - x == RatFunc());
    CHECK(x + (-x) == RatFunc());
    CHECK((x / x) == RatFunc(1l));
    RatFunc y = (u * q - RatFunc(1l)) / (q + RatFunc(3l));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * y).inverse() == x.inverse() * y.inverse());
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == (x * x).inverse());
    CHECK(x.pow(0) == RatFunc(1l));
    CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
    CHECK_THROWS_AS(x / RatFunc(), std::domain_error);
  }

  TEST_CASE("ratfunc string round trip") {
    std::vector<RatFunc> xs = {
        RatFunc(),
        RatFunc(1l),
        RatFunc(Rational(-3, 7)),
        U(),
        (U() - RatFunc(1l)) / (Q() + RatFunc(1l)),
        U().pow(-2) * Q().pow(3),
        (U() * Q() - RatFunc(2l)) / (Q() * Q() + Q() + RatFunc(1l)),
    };
    for (const RatFunc& x : xs) {
      CHECK(RatFunc::parse(x.to_string()) == x);
      CHECK(x.num().has_integer_coeffs());
      CHECK(x.den().has_integer_coeffs());
    }
    CHECK(RatFunc::parse("(u - 1)/(q + 1)") == (U() - RatFunc(1l)) / (Q() + RatFunc(1l)));
    CHECK(RatFunc::parse("u - 1") == U() - RatFunc(1l));
    CHECK_THROWS(RatFunc::parse("(u+1)/(q+1) junk"));
  }

  TEST_CASE("ratfunc evaluation") {
    RatFunc x = (U() - RatFunc(1l)) / (Q() + RatFunc(1l));
    CHECK(x.evaluate(3, 1) == 1);
    CHECK_THROWS_AS(x.evaluate(1, -1), std::domain_error);
    RatFunc y = U().pow(-1);
    CHECK(y.evaluate(Rational(2, 5), 1) == Rational(5, 2));
    CHECK_THROWS_AS(y.evaluate(0, 1), std::domain_error);
    RatFunc z = (U() * Q() + RatFunc(1l)) / (U() + Q());
    RatFunc zu = z.subst_u(2);
    CHECK(!zu.depends_on_u());
    CHECK(zu.evaluate(99, 3) == z.evaluate(2, 3));
    CHECK_THROWS_AS(((U() - RatFunc(1l)).inverse()).subst_u(1), std::domain_error);
  }

  TEST_CASE("specialization guards") {
    Specialization def;
    CHECK_NOTHROW(def.validate());
    CHECK(def.u0 == 1);
    CHECK(def.q0 == Rational(5, 7));

    Specialization bad = def;
    bad.q0 = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.q0 = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.q0 = -1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = def;
    bad.u0 = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = def;
    bad.u0 = -1;  // 1 + u0 vanishes (cross-component factor at k = 0)
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = def;
    bad.q0 = Rational(7, 5);
    bad.u0 = Rational(49, 25);  // 1 - q0^2 * (1/u0) = 0
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    Specialization ok = def;
    ok.q0 = Rational(2);
    ok.u0 = Rational(3);
    CHECK_NOTHROW(ok.validate());
  }

  TEST_CASE("complex arithmetic and principal roots") {
    const int bits = 128;
    mpf_class tol(1e-36, 256);

    BigComplex two = BigComplex::from_rational(2, bits);
    BigComplex r = two.sqrt_principal();
    CHECK(r.imag() == 0);
    mpf_class err = (r * r - two).abs();
    CHECK(err < tol * 2);

    BigComplex neg = BigComplex::from_rational(-3, bits);
    BigComplex rn = neg.sqrt_principal();
    CHECK(rn.real() == 0);
    CHECK(rn.imag() > 0);
    CHECK((rn * rn - neg).abs() < tol * 3);

    // Fourth root of a negative real: argument pi/4, so re == im > 0.
    BigComplex f = fourth_root_principal(Rational(-16), bits);
    CHECK(f.real() > 0);
    CHECK((f.real() - f.imag()) < tol);
    CHECK((f.imag() - f.real()) < tol);
    BigComplex f4 = f * f * f * f;
    CHECK((f4 - BigComplex::from_rational(-16, bits)).abs() < tol * 16);

    // sqrt(i) = (1 + i) sqrt(2)/2.
    BigComplex i = BigComplex::from_rationals(0, 1, bits);
    BigComplex si = i.sqrt_principal();
    CHECK((si * si - i).abs() < tol);
    CHECK(si.real() > 0);
    CHECK(mpf_class(si.real() - si.imag()).get_d() == doctest::Approx(0.0));

    BigComplex q = BigComplex::from_rational(Rational(5, 7), bits) /
                   BigComplex::from_rational(Rational(5, 7), bits);
    CHECK((q - BigComplex::from_rational(1, bits)).abs() == 0);

    // eval_complex: exact rational evaluation then rounding.
    Specialization s;
    RatFunc x = (Q() + RatFunc(1l)) / (Q() - RatFunc(2l));
    Rational exact = x.specialize(s);
    BigComplex xe = eval_complex(x, s, bits);
    mpf_class expect(0.0, bits);
    mpf_set_q(expect.get_mpf_t(), exact.get_mpq_t());
    CHECK(xe.imag() == 0);
    CHECK(xe.real() == expect);
  }

  TEST_CASE("matrix exact elimination") {
    Mat<Rational> m(3, 3);
    int v = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = v++;
    CHECK(rank_of(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    // m * ns[0] == 0
    for (int i = 0; i < 3; ++i) {
      Rational acc = 0;
      for (int j = 0; j < 3; ++j) acc += m.at(i, j) * ns[0][j];
      CHECK(acc == 0);
    }
    Mat<Rational> a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 7;
    a.at(1, 1) = 4;
    CHECK(det(a) == 1);
    Mat<Rational> ainv;
    REQUIRE(invert(a, ainv));
    CHECK((a * ainv) == Mat<Rational>::identity(2));

    RowBasis<Rational> basis(3);
    CHECK(basis.add({1, 2, 3}));
    CHECK(basis.add({0, 1, 1}));
    CHECK(!basis.add({1, 3, 4}));
    CHECK(basis.dim() == 2);
    CHECK(basis.contains({2, 5, 7}));
    CHECK(!basis.contains({0, 0, 1}));
  }

  TEST_CASE("matrix over rational functions") {
    Mat<RatFunc> m(2, 2);
    m.at(0, 0) = U();
    m.at(0, 1) = RatFunc(1l);
    m.at(1, 0) = RatFunc(1l);
    m.at(1, 1) = U().inverse();
    CHECK(rank_of(m) == 1);
    Mat<RatFunc> k(2, 2);
    k.at(0, 0) = Q();
    k.at(1, 1) = Q() - RatFunc(1l);
    k.at(0, 1) = RatFunc(2l);
    CHECK(det(k) == Q() * (Q() - RatFunc(1l)));
    Mat<RatFunc> kinv;
    REQUIRE(invert(k, kinv));
    CHECK((k * kinv) == Mat<RatFunc>::identity(2));
  }
}
