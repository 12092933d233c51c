#include "shrank/io/json.hpp"

#include <gtest/gtest.h>

using namespace shrank;

TEST(Json, RankReportRoundTrips) {
	FamilyParams p;
	p.family = Family::I;
	p.rho = Rational(1);
	p.lambda = Rational(1, 2);
	p.D = parse_gaussian("1/2+i");
	auto inst = instantiate_family(p);
	HlckSweepConfig cfg;
	cfg.sweep = 200;
	for (auto kind : {RankKind::kahler, RankKind::hlck, RankKind::skt}) {
		auto report = compute_rank(kind, inst, cfg);
		auto j = io::to_json(report);
		auto back = io::report_from_json(j);
		EXPECT_EQ(io::to_json(back), j);
		EXPECT_EQ(io::json::parse(j.dump()), j);
		EXPECT_EQ(back.certificate.witness, report.certificate.witness);
		EXPECT_TRUE(verify_report(inst, back).empty());
	}
}

TEST(Json, ParamsRoundTripForEveryFamily) {
	for (auto& regime : table_regimes())
		for (auto& p : regime.samples) {
			auto j = io::to_json(p);
			EXPECT_EQ(io::to_json(io::params_from_json(j)), j);
		}
}

TEST(Json, AlgebraInput) {
	auto inst = io::algebra_from_json(io::json::parse(R"({"family":"III","eps":"1","sign":-1})"));
	EXPECT_EQ(inst.label, "(III) eps=1 sign=-");
	auto ab = io::algebra_from_json(io::json::parse(R"j({"salamon":"(0,0,0,0,0,0)"})j"));
	EXPECT_EQ(ab.n, 3);
	EXPECT_THROW(io::algebra_from_json(io::json::parse(R"({"family":"II","rho":"0","B":"0","c":"0"})")), InputError);
	EXPECT_THROW(io::algebra_from_json(io::json::parse(R"({"nothing":1})")), InputError);
}

TEST(Json, SuspensionReport) {
	auto j = io::to_json(verify_suspension());
	EXPECT_TRUE(j.at("ok").get<bool>());
	EXPECT_EQ(j.at("steps").size(), 9u);
}
