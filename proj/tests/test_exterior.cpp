#include "oracles.hpp"
#include "shrank/differential.hpp"
#include "shrank/formulas.hpp"
#include "shrank/structure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace shrank;

TEST(MergeSign, MatchesPermutationBruteForce) {
	for (BasisMask a = 0; a < 64; ++a)
		for (BasisMask b = 0; b < 64; ++b) {
			if (a & b) continue;
			std::vector<int> seq;
			for (int k = 0; k < 6; ++k)
				if (a >> k & 1) seq.push_back(k);
			for (int k = 0; k < 6; ++k)
				if (b >> k & 1) seq.push_back(k);
			EXPECT_EQ(merge_sign(a, b), oracle::permutation_sign(seq)) << a << " " << b;
		}
}

TEST(Wedge, GradedCommutativity) {
	std::mt19937_64 rng(3);
	auto masks1 = masks_of_degree(3, 1), masks2 = masks_of_degree(3, 2);
	for (int t = 0; t < 50; ++t) {
		Form a(3), b(3);
		a.add_term(masks1[rng() % masks1.size()], Polynomial(long(rng() % 5) - 2));
		b.add_term(masks2[rng() % masks2.size()], Polynomial(long(rng() % 5) - 2));
		a.add_term(masks1[rng() % masks1.size()], Polynomial::var("u"));
		EXPECT_EQ(wedge(a, b), wedge(b, a));
		EXPECT_EQ(wedge(a, a), Form(3));
	}
	Form x = Form::phi(3, 1) + Form::phibar(3, 1);
	EXPECT_TRUE(power(x, 2).is_zero());
}

TEST(Form, BasisSignsAndBidegree) {
	Form f = Form::basis(3, {2, 1}, {});
	EXPECT_EQ(f, -Form::basis(3, {1, 2}, {}));
	Form g = Form::basis(3, {1}, {2, 3});
	auto m = g.terms().begin()->first;
	EXPECT_EQ(g.bidegree(m), (std::pair{1, 2}));
	EXPECT_EQ(g.label(m), "1|23");
}

TEST(Differential, AbelianIsZero) {
	auto spec = DifferentialSpec::abelian(3);
	Form omega = generic_metric();
	EXPECT_TRUE(spec.d(omega).is_zero());
	EXPECT_TRUE(spec.del_delbar(omega).is_zero());
}

TEST(Differential, FamilyPDelDelbar) {
	FamilyParams p;
	p.family = Family::P;
	auto inst = instantiate_family(p);
	Form dd = inst.spec.del_delbar(generic_metric());
	EXPECT_EQ(dd.terms().size(), 1u);
	// rho is 0 or 1, so rho^2 = rho
	EXPECT_EQ(reduce_binary_parameters(dd.coefficient({1, 2}, {1, 2})), parse_polynomial("-i*t2*rho"));
}

TEST(Differential, TwistedOnFamilyII) {
	FamilyParams p;
	p.family = Family::II;
	p.rho = Rational(1);
	p.B = GaussianRational(0);
	p.c = Rational(0);
	auto inst = instantiate_family(p);
	Form theta = Form::phi(3, 2) + Form::phibar(3, 2);
	Form big_omega = Form::basis(3, {1}, {1}, Polynomial::i()) + Form::basis(3, {2}, {2}, Polynomial::i());
	EXPECT_TRUE(inst.spec.twisted(theta, big_omega).is_zero());
	EXPECT_EQ(inst.spec.twisted(Form(3), big_omega), inst.spec.d(big_omega));
}

TEST(Differential, RealityOfGenericMetric) {
	Form omega = generic_metric();
	EXPECT_EQ(omega.conj(), omega);
	for (Family f : {Family::P, Family::I, Family::II, Family::III}) {
		FamilyParams p;
		p.family = f;
		auto inst = instantiate_family(p);
		Form d = inst.spec.d(omega);
		EXPECT_EQ(d.conj(), d);
		EXPECT_EQ(d, inst.spec.del(omega) + inst.spec.delbar(omega));
	}
}

TEST(Differential, RejectsTwistOfWrongDegree) {
	auto spec = DifferentialSpec::abelian(3);
	EXPECT_THROW(spec.twisted(Form::basis(3, {1}, {1}), Form::phi(3, 1)), std::invalid_argument);
}
