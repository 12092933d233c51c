#pragma once

#include "shrank/rank_engine.hpp"
#include "shrank/suspension.hpp"
#include "shrank/table.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace shrank::io {

using nlohmann::json;

inline json to_json(const FamilyParams& p) {
	json j{{"family", to_string(p.family)}};
	if (p.rho) j["rho"] = p.rho->get_str();
	if (p.lambda) j["lambda"] = p.lambda->get_str();
	if (p.D) j["D"] = to_string(*p.D);
	if (p.B) j["B"] = to_string(*p.B);
	if (p.c) j["c"] = p.c->get_str();
	if (p.eps) j["eps"] = p.eps->get_str();
	if (p.family == Family::III) j["sign"] = p.sigma;
	return j;
}

inline FamilyParams params_from_json(const json& j) {
	FamilyParams p;
	p.family = parse_family(j.at("family").get<std::string>());
	auto rat = [&](const char* key, std::optional<Rational>& out) {
		if (j.contains(key)) out = parse_rational(j.at(key).get<std::string>());
	};
	auto gauss = [&](const char* key, std::optional<GaussianRational>& out) {
		if (j.contains(key)) out = parse_gaussian(j.at(key).get<std::string>());
	};
	rat("rho", p.rho);
	rat("lambda", p.lambda);
	gauss("D", p.D);
	gauss("B", p.B);
	rat("c", p.c);
	rat("eps", p.eps);
	if (j.contains("sign")) p.sigma = j.at("sign").get<int>();
	p.validate();
	return p;
}

/// Algebra input: {"family": ..., params} or {"salamon": "(0,0,0,0,0,0)"}.
inline AlgebraInstance algebra_from_json(const json& j) {
	if (j.contains("salamon")) return instantiate_salamon(parse_salamon(j.at("salamon").get<std::string>()));
	if (j.contains("family")) return instantiate_family(params_from_json(j));
	throw InputError("algebra needs either 'family' or 'salamon'");
}

inline json to_json(const ForcedZeroStep& s) {
	json w = json::array();
	for (auto& x : s.weights) w.push_back(x.get_str());
	return {{"indices", s.indices}, {"weights", w}, {"text", s.describe()}};
}

inline ForcedZeroStep step_from_json(const json& j) {
	ForcedZeroStep s;
	s.indices = j.at("indices").get<std::vector<int>>();
	for (auto& w : j.at("weights")) s.weights.push_back(parse_rational(w.get<std::string>()));
	return s;
}

inline json to_json(const RankReport& r) {
	json algebra{{"label", r.algebra}};
	if (r.params) algebra["params"] = to_json(*r.params);
	if (r.salamon) algebra["salamon"] = *r.salamon;

	json coords = json::array();
	for (auto& x : r.certificate.witness) coords.push_back(x.get_str());
	json matrix = json::array();
	if (!r.certificate.witness.empty()) {
		auto h = r.certificate.witness_matrix();
		for (int a = 0; a < h.dim(); ++a) {
			json row = json::array();
			for (int b = 0; b < h.dim(); ++b) row.push_back(to_string(h(a, b)));
			matrix.push_back(row);
		}
	}
	json steps = json::array();
	for (auto& s : r.certificate.steps) steps.push_back(to_json(s));

	json theta = nullptr;
	if (r.theta) {
		theta = json::array();
		for (auto& a : *r.theta) theta.push_back(to_string(a));
	}
	json sweep = nullptr;
	if (r.sweep) {
		json cap_steps = json::array();
		for (auto& s : r.sweep->cap_steps) cap_steps.push_back(to_json(s));
		sweep = {{"evaluated", r.sweep->evaluated},
		         {"max_upper", r.sweep->max_upper},
		         {"cap", r.sweep->cap},
		         {"cap_steps", cap_steps},
		         {"best_index", r.sweep->best_index}};
	}
	return {{"kind", to_string(r.kind)},
	        {"algebra", algebra},
	        {"rank", {{"lower", r.lower}, {"upper", r.upper}, {"status", r.status()}}},
	        {"witness", {{"n", r.certificate.n}, {"real_coords", coords}, {"matrix", matrix}}},
	        {"theta", theta},
	        {"certificate", {{"lower", r.certificate.lower}, {"upper", r.certificate.upper}, {"steps", steps}}},
	        {"sweep", sweep},
	        {"invariant_level_only", r.invariant_level_only},
	        {"scope", r.scope()}};
}

inline RankReport report_from_json(const json& j) {
	RankReport r;
	r.kind = parse_rank_kind(j.at("kind").get<std::string>());
	auto& alg = j.at("algebra");
	r.algebra = alg.at("label").get<std::string>();
	if (alg.contains("params")) r.params = params_from_json(alg.at("params"));
	if (alg.contains("salamon")) r.salamon = alg.at("salamon").get<std::string>();
	r.lower = j.at("rank").at("lower").get<int>();
	r.upper = j.at("rank").at("upper").get<int>();
	auto& w = j.at("witness");
	r.certificate.n = w.at("n").get<int>();
	for (auto& x : w.at("real_coords")) r.certificate.witness.push_back(parse_rational(x.get<std::string>()));
	auto& c = j.at("certificate");
	r.certificate.lower = c.at("lower").get<int>();
	r.certificate.upper = c.at("upper").get<int>();
	for (auto& s : c.at("steps")) r.certificate.steps.push_back(step_from_json(s));
	if (!j.at("theta").is_null()) {
		std::vector<GaussianRational> t;
		for (auto& a : j.at("theta")) t.push_back(parse_gaussian(a.get<std::string>()));
		r.theta = std::move(t);
	}
	if (!j.at("sweep").is_null()) {
		auto& s = j.at("sweep");
		SweepSummary sw;
		sw.evaluated = s.at("evaluated").get<std::size_t>();
		sw.max_upper = s.at("max_upper").get<int>();
		sw.cap = s.at("cap").get<int>();
		for (auto& st : s.at("cap_steps")) sw.cap_steps.push_back(step_from_json(st));
		sw.best_index = s.at("best_index").get<std::size_t>();
		r.sweep = std::move(sw);
	}
	r.invariant_level_only = j.at("invariant_level_only").get<bool>();
	return r;
}

inline json to_json(const std::vector<TableRow>& rows) {
	json out = json::array();
	for (auto& row : rows) {
		json samples = json::array();
		for (auto& s : row.samples)
			samples.push_back({{"params", to_json(s.params)}, {"kahler", to_json(s.kr)}, {"hlck", to_json(s.hlck)}, {"skt", to_json(s.skt)}});
		out.push_back({{"family", row.regime.family},
		               {"condition", row.regime.condition},
		               {"expected", {{"kahler", row.regime.kr}, {"hlck", row.regime.hlck}, {"skt", row.regime.skt}}},
		               {"kahler_manifold_lower_bound_only", row.regime.kr_lower_only},
		               {"ok", row.ok()},
		               {"mismatches", row.mismatches},
		               {"samples", samples}});
	}
	return out;
}

inline json to_json(const SuspensionReport& rep) {
	json steps = json::array();
	for (auto& s : rep.steps) steps.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
	return {{"steps", steps}, {"cited", rep.cited}, {"verdict", rep.verdict}, {"ok", rep.ok()}};
}

}  // namespace shrank::io
