// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria 2 and 4 include the family (I) point (rho,lambda,D) = (0,0,-1),
// whose expected HlcK rank 3 is not attained by invariant forms. They are
// reported as FAIL and marked known when that point is the only failing item;
// the exit status is nonzero only for other failures, or for any failure
// under --strict.

#include "oracles.hpp"
#include "shrank/formulas.hpp"
#include "shrank/identities.hpp"
#include "shrank/suspension.hpp"
#include "shrank/table.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace shrank;

namespace {

struct Outcome {
	bool pass = false;
	std::string detail;
	/// Failure explained by the family (I) point (0,0,-1) alone.
	bool known = false;
};

const std::string known_point = "(I) (rho,lambda,D)=(0,0,-1): HlcKr = 2, expected 3";

std::string run_capture(const std::string& cmd, int& status) {
	std::string out;
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe) {
		status = -1;
		return out;
	}
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
	status = pclose(pipe);
	return out;
}

std::vector<TableRow> table_rows;

Outcome formulas() {
	auto check = verify_formulas();
	std::ostringstream os;
	os << check.coefficients << " coefficients, " << check.diffs.size() << " differences";
	for (auto& d : check.diffs) os << "; " << d;
	return {check.ok() && check.coefficients == 44, os.str()};
}

Outcome table() {
	table_rows = reproduce_table();
	std::size_t ok = 0;
	std::ostringstream os;
	for (auto& row : table_rows) ok += row.ok();
	os << ok << "/" << table_rows.size() << " regimes match";
	bool only_known = true;
	for (auto& row : table_rows)
		for (auto& m : row.mismatches) {
			os << "; " << m;
			only_known &= m == known_point;
		}
	bool pass = table_ok(table_rows);
	return {pass, os.str(), !pass && only_known};
}

Outcome identities() {
	auto results = check_identities();
	std::size_t checks = 0, failures = 0, min_instances = SIZE_MAX;
	std::ostringstream bad;
	for (auto& r : results) {
		checks += r.instances;
		failures += r.failures;
		min_instances = std::min(min_instances, r.instances);
		if (!r.ok()) bad << "; " << r.family << " " << r.name << " (" << r.first_failure << ")";
	}
	std::ostringstream os;
	os << results.size() << " identity/family pairs, " << checks << " exact checks, " << failures << " failures" << bad.str();
	return {identities_ok(results) && min_instances >= 200, os.str()};
}

Outcome hlck_witnesses() {
	std::ostringstream os;
	bool pass = true;

	FamilyParams ii;
	ii.family = Family::II;
	ii.rho = Rational(1);
	ii.B = GaussianRational(0);
	ii.c = Rational(0);
	auto inst_ii = instantiate_family(ii);
	auto slice = closedness_slice(RankKind::hlck, inst_ii, Form::phi(3, 2) + Form::phibar(3, 2));
	auto cert = max_rank_over_cone(slice);
	bool ii_ok = cert.exact() && cert.lower == 2 && verify_certificate(slice, cert).empty();
	os << "(II) theta = phi^2 + phibar^2: rank " << cert.lower << "/" << cert.upper;
	pass &= ii_ok;

	FamilyParams i;
	i.family = Family::I;
	i.rho = Rational(0);
	i.lambda = Rational(0);
	i.D = GaussianRational(-1);
	auto inst_i = instantiate_family(i);
	auto r = hlck_rank(inst_i);
	bool i_ok = r.lower == 3 && verify_report(inst_i, r).empty();
	os << "; (I) (0,0,-1): best certified rank " << r.lower << " over " << r.sweep->evaluated << " Lee forms (expected 3)";
	pass &= i_ok;

	int worst = 0;
	std::size_t evaluated = 0;
	for (long eps : {0L, 1L})
		for (int sigma : {1, -1}) {
			FamilyParams p;
			p.family = Family::III;
			p.eps = Rational(eps);
			p.sigma = sigma;
			HlckSweepConfig cfg;
			cfg.stop_at_cap = false;
			auto rep = hlck_rank(instantiate_family(p), cfg);
			worst = std::max({worst, rep.sweep->max_upper, rep.lower});
			evaluated += rep.sweep->evaluated;
			pass &= rep.sweep->evaluated >= 10000;
		}
	os << "; (III) " << evaluated << " Lee forms over 4 instances, largest per-theta bound " << worst;
	bool others = ii_ok && worst == 1;
	pass &= worst == 1;
	return {pass, os.str(), !pass && others && !i_ok};
}

Outcome oracles() {
	std::mt19937_64 rng(42);
	const oracle::HP tol("1e-30");
	int disagreements = 0;
	for (int t = 0; t < 1000; ++t) {
		auto h = oracle::random_hermitian(rng, 1 + t % 4);
		if (is_psd_exact(h) != oracle::numeric_psd(h, tol)) ++disagreements;
		if (static_cast<int>(rank_exact(h)) != oracle::numeric_rank(h, tol)) ++disagreements;
	}
	if (table_rows.empty()) table_rows = reproduce_table();
	int slices = 0, violations = 0;
	std::size_t points = 0;
	std::ostringstream bad;
	auto check = [&](const LinearSlice& slice, const RankReport& r, const std::string& tag) {
		auto cert = max_rank_over_cone(slice);
		auto grid = oracle::grid_max_rank(slice, 8000);
		++slices;
		points += grid.points;
		if (grid.max_rank > cert.upper || grid.max_rank > r.certificate.upper || cert.lower != r.certificate.lower) {
			++violations;
			bad << "; " << tag;
		}
	};
	for (auto& row : table_rows)
		for (auto& s : row.samples) {
			auto inst = instantiate_family(s.params);
			check(closedness_slice(RankKind::kahler, inst), s.kr, inst.label + " kahler");
			check(closedness_slice(RankKind::skt, inst), s.skt, inst.label + " skt");
			check(closedness_slice(RankKind::hlck, inst, real_one_form(3, *s.hlck.theta)), s.hlck, inst.label + " hlck");
		}
	std::ostringstream os;
	os << "1000 matrices, " << disagreements << " disagreements at 1e-30; " << slices << " slices, " << points
	   << " grid points, " << violations << " violations" << bad.str();
	return {disagreements == 0 && violations == 0, os.str()};
}

Outcome suspension() {
	auto rep = verify_suspension();
	std::ostringstream os;
	std::size_t passed = 0;
	for (auto& s : rep.steps) passed += s.passed;
	os << passed << "/" << rep.steps.size() << " steps; " << rep.verdict;
	return {rep.ok() && rep.verdict.rfind("Kr(M) = 1", 0) == 0, os.str()};
}

Outcome determinism(const std::string& cli) {
	if (cli.empty()) return {false, "no CLI path given (--cli)"};
	int s1 = 0, s2 = 0;
	std::string cmd = cli + " table --seed 42";
	auto a = run_capture(cmd, s1), b = run_capture(cmd, s2);
	std::ostringstream os;
	os << "two runs of 'table --seed 42': " << a.size() << " bytes, " << (a == b ? "identical" : "different");
	return {!a.empty() && a == b && s1 == s2, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
	bool strict = false;
	std::string cli;
	for (int k = 1; k < argc; ++k) {
		std::string a = argv[k];
		if (a == "--strict") strict = true;
		else if (a == "--cli" && k + 1 < argc) cli = argv[++k];
		else {
			std::cerr << "usage: acceptance [--strict] [--cli path/to/shrank]\n";
			return 1;
		}
	}

	struct Criterion {
		int id;
		const char* name;
		double limit_s;
		std::function<Outcome()> run;
	};
	std::vector<Criterion> criteria{
	    {1, "formula fixtures", 5, formulas},
	    {2, "table reproduction", 300, table},
	    {3, "identity suite", 60, identities},
	    {4, "HlcK witnesses", 120, hlck_witnesses},
	    {5, "PSD and cone-rank oracles", 600, oracles},
	    {6, "suspension report", 1, suspension},
	    {7, "determinism", 600, [&] { return determinism(cli); }},
	};

	int unexpected = 0, failed = 0;
	for (auto& c : criteria) {
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception& e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		bool in_time = secs <= c.limit_s;
		bool pass = o.pass && in_time;
		std::ostringstream line;
		line << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << std::fixed << std::setprecision(2) << secs
		     << "s, limit " << c.limit_s << "s): " << o.detail;
		if (!in_time) line << "; over time limit";
		bool known = !pass && in_time && o.known;
		if (known) line << " [known]";
		std::cout << line.str() << std::endl;
		if (!pass) {
			++failed;
			if (!known) ++unexpected;
		}
	}
	std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass";
	if (failed) std::cout << ", " << failed - unexpected << " known failures, " << unexpected << " unexpected";
	std::cout << "\n";
	if (strict) return failed ? 1 : 0;
	return unexpected ? 1 : 0;
}
