#include "shrank/formulas.hpp"

#include <gtest/gtest.h>

using namespace shrank;

TEST(Formulas, AllDisplaysMatch) {
	auto check = verify_formulas();
	EXPECT_TRUE(check.ok());
	for (auto& d : check.diffs) ADD_FAILURE() << d;
	EXPECT_EQ(check.coefficients, 44u);
}

TEST(Formulas, CoefficientCountsPerDisplay) {
	std::map<std::string, std::size_t> sizes;
	for (auto& fx : formula_fixtures()) sizes[fx.name] = fx.terms.size();
	EXPECT_EQ(sizes["1/2 omega^2"], 9u);
	EXPECT_EQ(sizes["1/6 omega^3"], 1u);
	EXPECT_EQ(sizes["(P) del omega"], 3u);
	EXPECT_EQ(sizes["(I) del omega"], 6u);
	EXPECT_EQ(sizes["(II) del omega"], 6u);
	EXPECT_EQ(sizes["(III) del omega"], 6u);
}

TEST(Formulas, CorruptedFixtureGivesOneDiffLine) {
	auto fixtures = formula_fixtures();
	for (auto& fx : fixtures)
		if (fx.name == "(I) del omega")
			for (auto& [label, text] : fx.terms)
				if (label == "12|2") text = "-vbar*rho + z*D";
	auto check = verify_formulas(fixtures);
	ASSERT_EQ(check.diffs.size(), 1u);
	EXPECT_NE(check.diffs[0].find("(I) del omega: phi^{12|2} expected"), std::string::npos) << check.diffs[0];
}

TEST(Formulas, BinaryParameterReduction) {
	auto p = parse_polynomial("rho^2*t2 + eps^3 - rho");
	EXPECT_EQ(reduce_binary_parameters(p), parse_polynomial("rho*t2 + eps - rho"));
}

TEST(Formulas, LabelsParse) {
	Form f(3);
	EXPECT_EQ(parse_label(3, "12|13"), f.key({1, 2}, {1, 3}));
	EXPECT_THROW(parse_label(3, "124"), InputError);
	EXPECT_THROW(parse_label(3, "14|1"), InputError);
}
