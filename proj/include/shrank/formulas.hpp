#pragma once

#include "shrank/structure.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shrank {

enum class Display { half_omega2, sixth_omega3, del, del_delbar };

/// Expected coefficients of one displayed expression. Terms are keyed by
/// labels such as "12|13" (phi^1 ^ phi^2 ^ phibar^1 ^ phibar^3); coefficients
/// are polynomial strings and may use the family symbols rho, lambda, D, B,
/// c, eps and sigma (the sign of family III).
struct FormulaFixture {
	std::string name;
	std::optional<Family> family;
	Display what;
	std::vector<std::pair<std::string, std::string>> terms;
};

inline const std::vector<FormulaFixture>& formula_fixtures() {
	static const std::vector<FormulaFixture> fixtures = {
	    {"1/2 omega^2",
	     std::nullopt,
	     Display::half_omega2,
	     {{"12|12", "r2*s2 - u*ubar"},
	      {"12|13", "-i*r2*v - ubar*z"},
	      {"12|23", "i*s2*z - u*v"},
	      {"13|12", "i*r2*vbar - u*zbar"},
	      {"13|13", "r2*t2 - z*zbar"},
	      {"13|23", "-i*t2*u - vbar*z"},
	      {"23|12", "-i*s2*zbar - ubar*vbar"},
	      {"23|13", "i*t2*ubar - v*zbar"},
	      {"23|23", "s2*t2 - v*vbar"}}},
	    {"1/6 omega^3",
	     std::nullopt,
	     Display::sixth_omega3,
	     {{"123|123", "i*r2*s2*t2 - i*r2*v*vbar - i*s2*z*zbar - i*t2*u*ubar + u*v*zbar - ubar*vbar*z"}}},
	    {"(P) del omega", Family::P, Display::del, {{"12|1", "-zbar*rho"}, {"12|2", "-vbar*rho"}, {"12|3", "i*t2*rho"}}},
	    {"(I) del omega",
	     Family::I,
	     Display::del,
	     {{"12|1", "-v + lambda*z - rho*zbar"},
	      {"12|2", "-vbar*rho + z*Dbar"},
	      {"12|3", "i*t2*rho"},
	      {"13|1", "-i*t2"},
	      {"23|1", "-i*t2*lambda"},
	      {"23|2", "-i*t2*Dbar"}}},
	    {"(II) del omega",
	     Family::II,
	     Display::del,
	     {{"12|1", "-i*s2 + z*Bbar - zbar*rho"},
	      {"12|2", "-c*v - vbar*rho"},
	      {"12|3", "i*t2*rho"},
	      {"13|1", "vbar"},
	      {"13|2", "-i*t2*c"},
	      {"23|1", "-i*t2*Bbar"}}},
	    {"(III) del omega",
	     Family::III,
	     Display::del,
	     {{"12|1", "-sigma*i*z - eps*v"},
	      {"12|2", "-sigma*i*v"},
	      {"13|1", "u - ubar - i*t2*eps"},
	      {"13|2", "i*s2 + sigma*t2"},
	      {"13|3", "v"},
	      {"23|1", "i*s2 - sigma*t2"}}},
	    {"(P) del delbar omega", Family::P, Display::del_delbar, {{"12|12", "-i*t2*rho"}}},
	    {"(I) del delbar omega", Family::I, Display::del_delbar, {{"12|12", "i*t2*(-rho + D + Dbar - lambda^2)"}}},
	    {"(II) del delbar omega", Family::II, Display::del_delbar, {{"12|12", "-i*t2*(rho + c^2 + B*Bbar)"}}},
	    {"(III) del delbar omega", Family::III, Display::del_delbar, {{"12|12", "-2i*t2"}, {"13|13", "-2i*s2"}}},
	};
	return fixtures;
}

inline std::string to_string(Display d) {
	switch (d) {
		case Display::half_omega2: return "1/2 omega^2";
		case Display::sixth_omega3: return "1/6 omega^3";
		case Display::del: return "del omega";
		case Display::del_delbar: return "del delbar omega";
	}
	return "?";
}

/// "12|13" -> mask in dimension n.
inline BasisMask parse_label(int n, const std::string& label) {
	auto bar = label.find('|');
	if (bar == std::string::npos) throw InputError("form label '" + label + "' lacks '|'");
	std::vector<int> hol, anti;
	for (std::size_t k = 0; k < label.size(); ++k) {
		if (k == bar) continue;
		char ch = label[k];
		if (ch < '1' || ch > '0' + n) throw InputError("bad index in form label '" + label + "'");
		(k < bar ? hol : anti).push_back(ch - '0');
	}
	return Form(n).key(hol, anti);
}

/// Symbolic value of one display, with family parameters left symbolic.
inline Form compute_display(Display what, std::optional<Family> family, int sigma) {
	Form omega = generic_metric();
	switch (what) {
		case Display::half_omega2: return Polynomial(Rational(1, 2)) * power(omega, 2);
		case Display::sixth_omega3: return Polynomial(Rational(1, 6)) * power(omega, 3);
		default: break;
	}
	if (!family) throw std::invalid_argument("display needs a family");
	FamilyParams p;
	p.family = *family;
	p.sigma = sigma;
	auto inst = instantiate_family(p);
	return what == Display::del ? inst.spec.del(omega) : inst.spec.del_delbar(omega);
}

/// Reduces modulo x^2 = x for the 0/1-valued parameters rho and eps.
inline Polynomial reduce_binary_parameters(const Polynomial& p) {
	const std::uint32_t rho = sym("rho").id, eps = sym("eps").id;
	Polynomial out;
	for (auto& [m, c] : p.terms()) {
		Monomial r = m;
		for (auto& [id, e] : r)
			if (id == rho || id == eps) e = 1;
		out.add_term(r, c);
	}
	return out;
}

struct FormulaCheck {
	std::size_t coefficients = 0;
	std::vector<std::string> diffs;
	bool ok() const { return diffs.empty(); }
};

/// Recomputes every display and compares it term by term with the fixtures.
/// Family III is checked for both signs.
inline FormulaCheck verify_formulas(const std::vector<FormulaFixture>& fixtures = formula_fixtures()) {
	FormulaCheck out;
	for (auto& fx : fixtures) {
		std::vector<int> signs = fx.family == Family::III ? std::vector<int>{1, -1} : std::vector<int>{1};
		for (int sigma : signs) {
			Form computed = compute_display(fx.what, fx.family, sigma).map_coefficients(reduce_binary_parameters);
			Form expected(3);
			std::map<Indeterminate, Binding> bind{{sym("sigma"), GaussianRational(sigma)}};
			for (auto& [label, text] : fx.terms)
				expected.add_term(parse_label(3, label), reduce_binary_parameters(substitute(parse_polynomial(text), bind)));
			std::string tag = fx.name + (signs.size() > 1 ? (sigma > 0 ? " [sign +]" : " [sign -]") : "");
			std::vector<BasisMask> masks;
			for (auto& [m, c] : computed.terms()) masks.push_back(m);
			for (auto& [m, c] : expected.terms())
				if (computed.coefficient(m).is_zero()) masks.push_back(m);
			for (auto m : masks) {
				++out.coefficients;
				auto e = expected.coefficient(m), c = computed.coefficient(m);
				if (e != c)
					out.diffs.push_back(tag + ": phi^{" + computed.label(m) + "} expected " + to_string(e) + ", computed " +
					                    to_string(c));
			}
		}
	}
	return out;
}

}  // namespace shrank
