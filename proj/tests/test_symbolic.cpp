#include "shrank/polynomial.hpp"

#include <gtest/gtest.h>

using namespace shrank;

TEST(Rational, ParsesFractionsAndDecimals) {
	EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
	EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
	EXPECT_EQ(parse_rational(" 6/8 "), Rational(3, 4));
	EXPECT_EQ(parse_rational("3."), Rational(3));
	EXPECT_THROW(parse_rational("1/0"), InputError);
	EXPECT_THROW(parse_rational("abc"), InputError);
	EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Gaussian, FieldArithmetic) {
	GaussianRational a(Rational(1), Rational(2)), b(Rational(3), Rational(-1));
	EXPECT_EQ(a * b, GaussianRational(Rational(5), Rational(5)));
	EXPECT_EQ((a / b) * b, a);
	EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
	EXPECT_EQ(a.conj().conj(), a);
	EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
}

TEST(Gaussian, ParseRoundTrip) {
	for (const char* s : {"0", "1", "-1", "i", "-i", "1/2+i", "-1+2i", "3/4-5/6i", "7i"}) {
		auto g = parse_gaussian(s);
		EXPECT_EQ(parse_gaussian(to_string(g)), g) << s;
	}
	EXPECT_EQ(parse_gaussian("1/2+i"), GaussianRational(Rational(1, 2), Rational(1)));
	EXPECT_THROW(parse_gaussian("1+x"), InputError);
}

TEST(Polynomial, AdditiveIdentityAndCancellation) {
	Polynomial u = Polynomial::var("u"), v = Polynomial::var("v");
	EXPECT_EQ(u * v.conj() + Polynomial(), u * v.conj());
	EXPECT_TRUE((u - u).is_zero());
	EXPECT_EQ((u + v) * (u - v), u * u - v * v);
}

TEST(Polynomial, ConjugationSwapsPartnersAndIsInvolutive) {
	Polynomial u = Polynomial::var("u"), r2 = Polynomial::var("r2");
	EXPECT_EQ(u.conj(), Polynomial::var("ubar"));
	EXPECT_EQ(r2.conj(), r2);
	Polynomial p = Polynomial::i() * u * u + Polynomial(GaussianRational(Rational(2), Rational(3))) * r2;
	EXPECT_EQ(p.conj().conj(), p);
	Polynomial q = u + Polynomial::var("vbar");
	EXPECT_EQ((p * q).conj(), p.conj() * q.conj());
}

TEST(Polynomial, ParserMatchesConstruction) {
	Polynomial t2 = Polynomial::var("t2"), lambda = Polynomial::var("lambda");
	auto p = parse_polynomial("i*t2*(-rho + D + Dbar - lambda^2)");
	Polynomial rho = Polynomial::var("rho"), D = Polynomial::var("D");
	EXPECT_EQ(p, Polynomial::i() * t2 * (-rho + D + D.conj() - lambda * lambda));
	EXPECT_EQ(parse_polynomial("-2i*t2"), Polynomial(GaussianRational(Rational(0), Rational(-2))) * t2);
	EXPECT_EQ(parse_polynomial("u/2"), Polynomial(Rational(1, 2)) * Polynomial::var("u"));
	EXPECT_THROW(parse_polynomial("u*("), InputError);
}

TEST(Polynomial, SubstitutionBindsSymbols) {
	auto p = parse_polynomial("rho*u + D*Dbar");
	std::map<Indeterminate, Binding> bind{{sym("rho"), GaussianRational(0)},
	                                      {sym("D"), GaussianRational(Rational(1), Rational(1))}};
	auto q = substitute(p, bind);
	EXPECT_EQ(q, Polynomial(2));
}

TEST(Polynomial, SubstitutionRejectsRealityViolations) {
	auto p = parse_polynomial("r2 + u");
	EXPECT_THROW(substitute(p, {{sym("r2"), GaussianRational::i()}}), InputError);
	EXPECT_THROW(substitute(p, {{sym("u"), GaussianRational(1)}, {sym("ubar"), GaussianRational(2)}}), InputError);
}
