#include "shrank/rank_engine.hpp"
#include "shrank/table.hpp"

#include <gtest/gtest.h>

using namespace shrank;

namespace {

FamilyParams family_i(const char* rho, const char* lambda, const char* D) {
	FamilyParams p;
	p.family = Family::I;
	p.rho = parse_rational(rho);
	p.lambda = parse_rational(lambda);
	p.D = parse_gaussian(D);
	return p;
}

HlckSweepConfig quick(std::size_t sweep = 300) {
	HlckSweepConfig c;
	c.sweep = sweep;
	return c;
}

}  // namespace

TEST(Rank, KahlerAndSktMatchTableWithExactCertificates) {
	for (auto& regime : table_regimes())
		for (auto& p : regime.samples) {
			auto inst = instantiate_family(p);
			auto kr = kahler_rank(inst), skt = skt_rank(inst);
			EXPECT_EQ(kr.lower, regime.kr) << inst.label;
			EXPECT_EQ(skt.lower, regime.skt) << inst.label;
			EXPECT_EQ(kr.status(), "exact");
			EXPECT_EQ(skt.status(), "exact");
			EXPECT_TRUE(verify_report(inst, kr).empty());
			EXPECT_TRUE(verify_report(inst, skt).empty());
		}
}

TEST(Rank, SktExampleFromCli) {
	auto inst = instantiate_family(family_i("0", "0", "-1"));
	EXPECT_EQ(skt_rank(inst).lower, 2);
}

TEST(Rank, AbelianAlgebraIsKahler) {
	auto inst = abelian_instance(3);
	EXPECT_EQ(kahler_rank(inst).lower, 3);
	EXPECT_EQ(hlck_rank(inst, quick()).lower, 3);
}

TEST(Hlck, FamilyIIWithSpecialLeeFormIsExactlyTwo) {
	FamilyParams p;
	p.family = Family::II;
	p.rho = Rational(1);
	p.B = GaussianRational(0);
	p.c = Rational(0);
	auto inst = instantiate_family(p);
	Form theta = Form::phi(3, 2) + Form::phibar(3, 2);
	auto slice = closedness_slice(RankKind::hlck, inst, theta);
	auto cert = max_rank_over_cone(slice);
	EXPECT_EQ(cert.lower, 2);
	EXPECT_TRUE(cert.exact());
	EXPECT_TRUE(verify_certificate(slice, cert).empty());
}

TEST(Hlck, FamilyIAtPositiveDReachesThree) {
	auto inst = instantiate_family(family_i("0", "0", "1"));
	auto r = hlck_rank(inst, quick(3000));
	EXPECT_EQ(r.lower, 3);
	EXPECT_EQ(r.status(), "exact");
	EXPECT_TRUE(verify_report(inst, r).empty());
}

TEST(Hlck, FamilyIIIPerThetaBoundKeepsOnlyFirstDirection) {
	FamilyParams p;
	p.family = Family::III;
	p.eps = Rational(1);
	auto inst = instantiate_family(p);
	TwistedSystem sys(inst);
	auto cands = theta_candidates(sys, {}, quick(200));
	for (auto& c : cands) {
		auto fr = facial_reduction(sys.slice(c));
		EXPECT_LE(fr.surviving.size(), 1u);
		for (int j : fr.surviving) EXPECT_EQ(j, 0);
	}
}

TEST(Hlck, RejectsNonClosedLeeForm) {
	auto inst = instantiate_family(family_i("1", "0", "0"));
	EXPECT_THROW(closedness_slice(RankKind::hlck, inst, Form::phi(3, 3) + Form::phibar(3, 3)), InputError);
}

TEST(Hlck, DeterministicForFixedSeed) {
	auto inst = instantiate_family(family_i("1", "1", "-1+2i"));
	auto a = hlck_rank(inst, quick()), b = hlck_rank(inst, quick());
	EXPECT_EQ(a.certificate.witness, b.certificate.witness);
	EXPECT_EQ(*a.theta, *b.theta);
}

TEST(Rank, SymbolicParametersAreRejected) {
	FamilyParams p;
	p.family = Family::P;
	EXPECT_THROW(kahler_rank(instantiate_family(p)), InputError);
}

TEST(Table, RegimeRoutingIsExact) {
	auto& regimes = table_regimes();
	for (std::size_t k = 0; k < regimes.size(); ++k)
		for (auto& p : regimes[k].samples) EXPECT_EQ(regime_of(p), k) << p.describe();
	EXPECT_EQ(regime_of(family_i("1", "1", "1+5i")), 2u);
	EXPECT_EQ(regime_of(family_i("0", "0", "-1+i")), 3u);
}
