#pragma once

#include "shrank/rank_engine.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace shrank {

struct TableRegime {
	std::string family;
	std::string condition;
	std::vector<FamilyParams> samples;
	int kr, hlck, skt;
	/// Kr is only known from below at manifold level.
	bool kr_lower_only = false;
};

namespace detail {

inline FamilyParams p_params(long rho) {
	FamilyParams p;
	p.family = Family::P;
	p.rho = Rational(rho);
	return p;
}
inline FamilyParams i_params(long rho, const char* lambda, const char* D) {
	FamilyParams p;
	p.family = Family::I;
	p.rho = Rational(rho);
	p.lambda = parse_rational(lambda);
	p.D = parse_gaussian(D);
	return p;
}
inline FamilyParams ii_params(long rho, const char* B, const char* c) {
	FamilyParams p;
	p.family = Family::II;
	p.rho = Rational(rho);
	p.B = parse_gaussian(B);
	p.c = parse_rational(c);
	return p;
}
inline FamilyParams iii_params(long eps, int sigma) {
	FamilyParams p;
	p.family = Family::III;
	p.eps = Rational(eps);
	p.sigma = sigma;
	return p;
}

}  // namespace detail

/// The eight regimes with representative parameters and expected (Kr, HlcKr, SKTr).
inline const std::vector<TableRegime>& table_regimes() {
	using namespace detail;
	static const std::vector<TableRegime> regimes = {
	    {"P", "rho=0", {p_params(0)}, 3, 3, 3},
	    {"P", "rho=1", {p_params(1)}, 2, 2, 2},
	    {"I",
	     "-rho+D+Dbar-lambda^2=0",
	     {i_params(0, "0", "0"), i_params(1, "1", "1"), i_params(1, "0", "1/2+i"), i_params(0, "2", "2+i")},
	     2,
	     2,
	     3},
	    {"I",
	     "-rho+D+Dbar-lambda^2!=0, (rho,lambda,D)!=(0,0,-1)",
	     {i_params(1, "0", "0"), i_params(0, "1", "i"), i_params(1, "1", "-1+2i")},
	     2,
	     2,
	     2},
	    {"I", "(rho,lambda,D)=(0,0,-1)", {i_params(0, "0", "-1")}, 2, 3, 2},
	    {"II",
	     "(rho,B,c)!=(1,1,0)",
	     {ii_params(1, "0", "0"), ii_params(0, "1", "0"), ii_params(0, "0", "1"), ii_params(1, "1+i", "1")},
	     1,
	     2,
	     2},
	    {"II", "(rho,B,c)=(1,1,0)", {ii_params(1, "1", "0")}, 1, 2, 2, true},
	    {"III", "", {iii_params(0, 1), iii_params(1, 1), iii_params(0, -1), iii_params(1, -1)}, 1, 1, 1},
	};
	return regimes;
}

/// Index of the regime a concrete parameter set belongs to, from the exact
/// regime conditions.
inline std::size_t regime_of(const FamilyParams& p) {
	switch (p.family) {
		case Family::P: return *p.rho == 0 ? 0 : 1;
		case Family::I: {
			if (*p.rho == 0 && sgn(*p.lambda) == 0 && *p.D == GaussianRational(-1)) return 4;
			Rational lhs = -*p.rho + 2 * p.D->re - *p.lambda * *p.lambda;
			return sgn(lhs) == 0 ? 2 : 3;
		}
		case Family::II: return (*p.rho == 1 && *p.B == GaussianRational(1) && sgn(*p.c) == 0) ? 6 : 5;
		case Family::III: return 7;
	}
	throw std::logic_error("unreachable");
}

struct TableSample {
	FamilyParams params;
	RankReport kr, hlck, skt;
	std::vector<std::string> problems;
};

struct TableRow {
	TableRegime regime;
	std::vector<TableSample> samples;
	std::vector<std::string> mismatches;
	bool ok() const { return mismatches.empty(); }
};

inline TableRow evaluate_regime(const TableRegime& regime, std::size_t index, const HlckSweepConfig& config) {
	TableRow row{regime, {}, {}};
	for (auto& p : regime.samples) {
		auto inst = instantiate_family(p);
		TableSample s{p, kahler_rank(inst, config.search), hlck_rank(inst, config), skt_rank(inst, config.search), {}};
		std::string tag = inst.label + ": ";
		if (regime_of(p) != index) s.problems.push_back(tag + "parameters do not satisfy the regime condition");
		for (auto* r : {&s.kr, &s.hlck, &s.skt})
			for (auto& e : verify_report(inst, *r)) s.problems.push_back(tag + to_string(r->kind) + " certificate: " + e);
		if (!s.kr.certificate.exact()) s.problems.push_back(tag + "Kr not certified exactly");
		if (!s.skt.certificate.exact()) s.problems.push_back(tag + "SKTr not certified exactly");
		if (s.kr.lower != regime.kr)
			s.problems.push_back(tag + "Kr = " + std::to_string(s.kr.lower) + ", expected " + std::to_string(regime.kr));
		if (s.hlck.lower != regime.hlck)
			s.problems.push_back(tag + "HlcKr = " + std::to_string(s.hlck.lower) + ", expected " + std::to_string(regime.hlck));
		if (s.skt.lower != regime.skt)
			s.problems.push_back(tag + "SKTr = " + std::to_string(s.skt.lower) + ", expected " + std::to_string(regime.skt));
		if (regime.kr_lower_only && !inst.invariant_level_only) s.problems.push_back(tag + "missing invariant-level flag");
		for (auto& e : s.problems) row.mismatches.push_back(e);
		row.samples.push_back(std::move(s));
	}
	return row;
}

inline std::vector<TableRow> reproduce_table(const HlckSweepConfig& config = {}) {
	std::vector<TableRow> rows;
	auto& regimes = table_regimes();
	for (std::size_t k = 0; k < regimes.size(); ++k) rows.push_back(evaluate_regime(regimes[k], k, config));
	return rows;
}

namespace detail {

/// Cell text: the common value over samples, or the list of values if they differ.
template <class Get>
std::string table_cell(const TableRow& row, Get get, int expected) {
	std::vector<int> values;
	for (auto& s : row.samples) values.push_back(get(s));
	bool same = std::all_of(values.begin(), values.end(), [&](int v) { return v == values.front(); });
	std::string cell;
	if (same) {
		cell = std::to_string(values.front());
	} else {
		for (std::size_t k = 0; k < values.size(); ++k) cell += (k ? "/" : "") + std::to_string(values[k]);
	}
	if (!same || values.front() != expected) cell += " (expected " + std::to_string(expected) + ")";
	return cell;
}

}  // namespace detail

inline std::string table_markdown(const std::vector<TableRow>& rows) {
	std::ostringstream os;
	os << "| class | condition | Kr | HlcKr | SKTr | samples | status |\n";
	os << "|---|---|---|---|---|---|---|\n";
	for (auto& row : rows) {
		auto& r = row.regime;
		std::string kr = detail::table_cell(row, [](const TableSample& s) { return s.kr.lower; }, r.kr);
		if (r.kr_lower_only) kr += " (invariant; manifold >=1)";
		std::string hl = detail::table_cell(row, [](const TableSample& s) { return s.hlck.lower; }, r.hlck);
		std::string sk = detail::table_cell(row, [](const TableSample& s) { return s.skt.lower; }, r.skt);
		os << "| (" << r.family << ") | " << (r.condition.empty() ? "-" : r.condition) << " | " << kr << " | " << hl << " | " << sk
		   << " | " << row.samples.size() << " | " << (row.ok() ? "ok" : "MISMATCH") << " |\n";
	}
	os << "\nKr and SKTr are certified exactly. HlcKr is a certified lower bound at the reported Lee form; "
	      "the upper side is sweep evidence unless the theta-independent cap meets it.\n";
	return os.str();
}

inline std::string table_text(const std::vector<TableRow>& rows) {
	std::ostringstream os;
	for (auto& row : rows) {
		auto& r = row.regime;
		os << "(" << r.family << ") " << (r.condition.empty() ? "all" : r.condition) << ": expected (" << (r.kr_lower_only ? ">=" : "")
		   << r.kr << ", " << r.hlck << ", " << r.skt << ") " << (row.ok() ? "ok" : "MISMATCH") << "\n";
		for (auto& s : row.samples) {
			os << "  " << s.kr.algebra << ": Kr " << s.kr.lower << "/" << s.kr.upper << ", HlcKr " << s.hlck.lower << " (cap "
			   << s.hlck.upper << ", sweep " << s.hlck.sweep->evaluated << ", per-theta max upper " << s.hlck.sweep->max_upper
			   << "), SKTr " << s.skt.lower << "/" << s.skt.upper << "\n";
		}
		for (auto& m : row.mismatches) os << "  ! " << m << "\n";
	}
	return os.str();
}

inline bool table_ok(const std::vector<TableRow>& rows) {
	return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.ok(); });
}

}  // namespace shrank
