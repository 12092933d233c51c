#include "shrank/formulas.hpp"
#include "shrank/identities.hpp"
#include "shrank/io/json.hpp"
#include "shrank/rank_engine.hpp"
#include "shrank/suspension.hpp"
#include "shrank/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace shrank;

namespace {

struct AlgebraFlags {
	std::optional<std::string> family, rho, lambda, D, B, c, eps, sign, salamon, algebra;

	void attach(CLI::App* cmd) {
		cmd->add_option("--family", family, "P, I, II or III");
		cmd->add_option("--rho", rho, "0 or 1");
		cmd->add_option("--lambda", lambda, "rational >= 0");
		cmd->add_option("--D", D, "Gaussian rational with Im D >= 0, e.g. 1/2+i");
		cmd->add_option("--B", B, "Gaussian rational");
		cmd->add_option("--c", c, "rational >= 0");
		cmd->add_option("--eps", eps, "0 or 1");
		cmd->add_option("--sign", sign, "+1 or -1 (family III)");
		cmd->add_option("--salamon", salamon, "real algebra in Salamon notation, e.g. (0,0,0,0,0,0)");
		cmd->add_option("--algebra", algebra, "JSON algebra description, inline or @file");
	}

	AlgebraInstance instance() const {
		int sources = family.has_value() + salamon.has_value() + algebra.has_value();
		if (sources != 1) throw InputError("give exactly one of --family, --salamon, --algebra");
		if (algebra) {
			std::string text = *algebra;
			if (!text.empty() && text[0] == '@') {
				std::ifstream in(text.substr(1));
				if (!in) throw InputError("cannot read " + text.substr(1));
				std::stringstream ss;
				ss << in.rdbuf();
				text = ss.str();
			}
			io::json j;
			try {
				j = io::json::parse(text);
			} catch (const io::json::exception& e) {
				throw InputError(std::string("bad --algebra JSON: ") + e.what());
			}
			return io::algebra_from_json(j);
		}
		if (salamon) {
			if (rho || lambda || D || B || c || eps || sign) throw InputError("family parameters need --family");
			return instantiate_salamon(parse_salamon(*salamon));
		}
		FamilyParams p;
		p.family = parse_family(*family);
		if (rho) p.rho = parse_rational(*rho);
		if (lambda) p.lambda = parse_rational(*lambda);
		if (D) p.D = parse_gaussian(*D);
		if (B) p.B = parse_gaussian(*B);
		if (c) p.c = parse_rational(*c);
		if (eps) p.eps = parse_rational(*eps);
		if (sign) {
			if (*sign == "+" || *sign == "1" || *sign == "+1") p.sigma = 1;
			else if (*sign == "-" || *sign == "-1") p.sigma = -1;
			else throw InputError("--sign must be +1 or -1");
		}
		return instantiate_family(p);
	}
};

void emit(const std::string& text, const std::string& out) {
	if (out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(out);
	if (!f) throw InputError("cannot write " + out);
	f << text;
}

std::string rank_text(const RankReport& r) {
	std::ostringstream os;
	os << r.algebra << "\n";
	os << to_string(r.kind) << " rank: " << r.lower;
	if (r.upper != r.lower) os << " (upper " << r.upper << ")";
	os << " [" << r.status() << "]\n";
	if (r.theta) {
		os << "Lee form coefficients:";
		for (auto& a : *r.theta) os << " " << to_string(a);
		os << "\n";
	}
	if (!r.certificate.witness.empty()) {
		auto h = r.certificate.witness_matrix();
		os << "witness H:\n";
		for (int a = 0; a < h.dim(); ++a) {
			os << " ";
			for (int b = 0; b < h.dim(); ++b) os << " " << to_string(h(a, b));
			os << "\n";
		}
	}
	for (auto& s : r.certificate.steps) os << "forced: " << s.describe() << "\n";
	if (r.sweep)
		os << "sweep: " << r.sweep->evaluated << " Lee forms, per-theta max upper " << r.sweep->max_upper << ", cap " << r.sweep->cap
		   << "\n";
	os << r.scope() << "\n";
	return os.str();
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Degenerate special-Hermitian ranks of invariant complex structures"};
	app.require_subcommand(1);

	std::string rank_format = "json", table_format = "md", format = "text", out;
	std::uint64_t seed = 42;
	std::size_t sweep = 10000;
	auto common = [&](CLI::App* cmd, std::string& target) {
		cmd->add_option("--format", target, "json, md or text")->check(CLI::IsMember({"json", "md", "text"}));
		cmd->add_option("--out", out, "write the report here instead of stdout");
	};
	auto seeded = [&](CLI::App* cmd) {
		cmd->add_option("--seed", seed, "random seed");
		cmd->add_option("--sweep", sweep, "number of Lee forms tried for hlck");
	};

	auto* rank = app.add_subcommand("rank", "rank of one algebra");
	std::string kind;
	AlgebraFlags rank_alg;
	rank->add_option("--kind", kind, "kahler, hlck or skt")->required();
	rank_alg.attach(rank);
	seeded(rank);
	common(rank, rank_format);

	auto* table = app.add_subcommand("table", "ranks of all families against the expected table");
	seeded(table);
	common(table, table_format);

	auto* verify = app.add_subcommand("verify-paper", "recompute the displayed omega^2, omega^3, del omega and del delbar omega");
	common(verify, format);

	auto* identities = app.add_subcommand("check-identities", "randomized exact checks of the differential identities");
	std::size_t instances = 200;
	identities->add_option("--seed", seed, "random seed");
	identities->add_option("--instances", instances, "instances per family");
	common(identities, format);

	auto* suspension = app.add_subcommand("suspension", "algebraic steps of the torus suspension");
	common(suspension, format);

	auto* parse = app.add_subcommand("parse", "show the structure equations of an algebra");
	AlgebraFlags parse_alg;
	std::string report_file;
	parse_alg.attach(parse);
	parse->add_option("--report", report_file, "re-emit a rank report JSON file after parsing it");
	common(parse, format);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 1;
	}

	try {
		HlckSweepConfig cfg;
		cfg.seed = seed;
		cfg.search.seed = seed;
		cfg.sweep = sweep;

		if (rank->parsed()) {
			auto k = parse_rank_kind(kind);
			auto inst = rank_alg.instance();
			auto report = compute_rank(k, inst, cfg);
			if (rank_format == "json") emit(io::to_json(report).dump(2) + "\n", out);
			else emit(rank_text(report), out);
			return 0;
		}
		if (table->parsed()) {
			auto rows = reproduce_table(cfg);
			if (table_format == "json") emit(io::to_json(rows).dump(2) + "\n", out);
			else if (table_format == "md") emit(table_markdown(rows), out);
			else emit(table_text(rows), out);
			return table_ok(rows) ? 0 : 2;
		}
		if (verify->parsed()) {
			auto check = verify_formulas();
			if (format == "json") {
				emit(io::json{{"coefficients", check.coefficients}, {"diffs", check.diffs}, {"ok", check.ok()}}.dump(2) + "\n", out);
			} else {
				std::ostringstream os;
				for (auto& d : check.diffs) os << d << "\n";
				os << check.coefficients << " coefficients, " << check.diffs.size() << " differences\n";
				emit(os.str(), out);
			}
			return check.ok() ? 0 : 2;
		}
		if (identities->parsed()) {
			auto results = check_identities({seed, instances});
			if (format == "json") {
				io::json j = io::json::array();
				for (auto& r : results)
					j.push_back({{"name", r.name}, {"family", r.family}, {"instances", r.instances}, {"failures", r.failures},
					             {"first_failure", r.first_failure}});
				emit(j.dump(2) + "\n", out);
			} else {
				std::ostringstream os;
				for (auto& r : results) {
					os << (r.ok() ? "ok   " : "FAIL ") << r.family << " " << r.name << ": " << r.instances << " instances, "
					   << r.failures << " failures";
					if (!r.ok()) os << " (first: " << r.first_failure << ")";
					os << "\n";
				}
				emit(os.str(), out);
			}
			return identities_ok(results) ? 0 : 2;
		}
		if (suspension->parsed()) {
			auto rep = verify_suspension();
			emit(format == "json" ? io::to_json(rep).dump(2) + "\n" : suspension_text(rep), out);
			return rep.ok() ? 0 : 2;
		}
		if (parse->parsed()) {
			if (!report_file.empty()) {
				std::ifstream in(report_file);
				if (!in) throw InputError("cannot read " + report_file);
				io::json j;
				try {
					j = io::json::parse(in);
				} catch (const io::json::exception& e) {
					throw InputError(std::string("bad report JSON: ") + e.what());
				}
				emit(io::to_json(io::report_from_json(j)).dump(2) + "\n", out);
				return 0;
			}
			if (parse_alg.salamon && !parse_alg.family && !parse_alg.algebra) {
				auto s = parse_salamon(*parse_alg.salamon);
				if (!s.is_abelian()) {
					// Jacobi already checked by the parser; no complex structure to show
					if (format == "json") {
						io::json j{{"label", "salamon " + s.text}, {"dim", s.dim()}, {"equations", s.equations()}, {"jacobi_defects", io::json::array()}};
						emit(j.dump(2) + "\n", out);
					} else {
						std::ostringstream os;
						os << "salamon " << s.text << "\n";
						for (auto& e : s.equations()) os << "  " << e << "\n";
						os << "  d^2 = 0\n";
						emit(os.str(), out);
					}
					return 0;
				}
			}
			auto inst = parse_alg.instance();
			if (format == "json") {
				io::json images = io::json::array();
				for (int g = 0; g < 2 * inst.n; ++g) images.push_back(to_string(inst.spec.generator_image(g)));
				io::json j{{"label", inst.label}, {"n", inst.n}, {"d_generators", images},
				           {"jacobi_defects", inst.spec.jacobi_defects()}};
				if (inst.salamon) j["equations"] = inst.salamon->equations();
				emit(j.dump(2) + "\n", out);
			} else {
				std::ostringstream os;
				os << inst.label << "\n";
				if (inst.salamon)
					for (auto& e : inst.salamon->equations()) os << "  " << e << "\n";
				for (int g = 0; g < inst.n; ++g)
					os << "  d phi^" << g + 1 << " = " << to_string(inst.spec.generator_image(g)) << "\n";
				os << (inst.spec.jacobi_defects().empty() ? "  d^2 = 0\n" : "  d^2 != 0\n");
				emit(os.str(), out);
			}
			return 0;
		}
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
