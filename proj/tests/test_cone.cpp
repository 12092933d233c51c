#include "oracles.hpp"
#include "shrank/table.hpp"

#include <gtest/gtest.h>

using namespace shrank;

namespace {

RealVector coords(int n, std::initializer_list<std::pair<int, long>> entries) {
	RealVector x(HermitianCoeffMatrix::real_dim(n), Rational(0));
	for (auto [k, v] : entries) x[k] = v;
	return x;
}

}  // namespace

TEST(Cone, FullSliceHasFullRank) {
	for (int n = 1; n <= 4; ++n) {
		auto cert = max_rank_over_cone(LinearSlice::full(n));
		EXPECT_EQ(cert.lower, n);
		EXPECT_TRUE(cert.exact());
	}
}

TEST(Cone, OffDiagonalSliceHasRankZero) {
	auto slice = LinearSlice::span(3, {coords(3, {{3, 1}}), coords(3, {{4, 1}}), coords(3, {{7, 1}})});
	auto fr = facial_reduction(slice);
	EXPECT_TRUE(fr.surviving.empty());
	auto cert = max_rank_over_cone(slice);
	EXPECT_EQ(cert.upper, 0);
	EXPECT_TRUE(verify_certificate(slice, cert).empty());
}

TEST(Cone, ForcedCombinationIsFound) {
	// H11 = -H22 on the slice forces both to vanish.
	auto slice = LinearSlice::span(2, {coords(2, {{0, 1}, {1, -1}}), coords(2, {{2, 1}})});
	auto fr = facial_reduction(slice);
	ASSERT_FALSE(fr.steps.empty());
	EXPECT_TRUE(step_holds(slice, fr.steps.front()));
	EXPECT_EQ(max_rank_over_cone(slice).upper, 0);
}

TEST(Cone, TamperedCertificateIsRejected) {
	auto slice = LinearSlice::span(3, {coords(3, {{0, 1}}), coords(3, {{1, 1}})});
	auto cert = max_rank_over_cone(slice);
	EXPECT_EQ(cert.lower, 2);
	EXPECT_TRUE(verify_certificate(slice, cert).empty());
	auto bad = cert;
	bad.witness[2] = 1;
	EXPECT_FALSE(verify_certificate(slice, bad).empty());
	bad = cert;
	bad.upper = 1;
	EXPECT_FALSE(verify_certificate(slice, bad).empty());
	bad = cert;
	bad.witness[0] = -1;
	EXPECT_FALSE(verify_certificate(slice, bad).empty());
}

TEST(Cone, GridBruteForceNeverBeatsCertificateOnTableSlices) {
	for (auto& regime : table_regimes())
		for (auto& p : regime.samples) {
			auto inst = instantiate_family(p);
			for (auto kind : {RankKind::kahler, RankKind::skt}) {
				auto slice = closedness_slice(kind, inst);
				auto cert = max_rank_over_cone(slice);
				auto grid = oracle::grid_max_rank(slice, 4000);
				EXPECT_LE(grid.max_rank, cert.upper) << inst.label << " " << to_string(kind);
				EXPECT_LE(grid.max_rank, cert.lower) << inst.label << " " << to_string(kind);
			}
		}
}
