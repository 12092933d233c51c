#include "shrank/identities.hpp"

#include <gtest/gtest.h>

using namespace shrank;

TEST(Identities, AllHoldOnRandomInstances) {
	auto results = check_identities({7, 60});
	EXPECT_EQ(results.size(), 4u * 11u);
	for (auto& r : results) {
		EXPECT_EQ(r.instances, 60u);
		EXPECT_TRUE(r.ok()) << r.family << " " << r.name << ": " << r.first_failure;
	}
	EXPECT_TRUE(identities_ok(results));
}

TEST(Identities, ExpansionPotentialIsNotVacuous) {
	FamilyParams p;
	p.family = Family::I;
	p.rho = Rational(1);
	p.lambda = Rational(1);
	p.D = GaussianRational(1);
	auto inst = instantiate_family(p);
	auto closed = closed_one_forms(inst);
	ASSERT_FALSE(closed.empty());
	Form theta = closed.front();
	auto kernel = detail::twisted_closed_two_forms(inst.spec, theta);
	ASSERT_FALSE(kernel.empty());
	for (auto& w : kernel) EXPECT_TRUE(inst.spec.twisted(theta, w).is_zero());
	Form wt = kernel.front();
	Form alpha = Form::phi(3, 3) + Form::phibar(3, 1);
	Form what = wt + inst.spec.twisted(theta, alpha);
	Form target = power(what, 2) - power(wt, 2);
	ASSERT_FALSE(target.is_zero());
	Form phi = detail::expansion_potential(inst.spec, theta, wt, alpha, 2, false);
	Form two_theta = Polynomial(2) * theta;
	EXPECT_EQ(inst.spec.twisted(two_theta, phi), target);
	// the twist must be k theta; theta alone does not work
	EXPECT_NE(inst.spec.twisted(theta, phi), target);
}

TEST(Identities, Binomials) {
	EXPECT_EQ(detail::binomial(3, 0), 1);
	EXPECT_EQ(detail::binomial(3, 1), 3);
	EXPECT_EQ(detail::binomial(3, 2), 3);
	EXPECT_EQ(detail::binomial(4, 2), 6);
}
