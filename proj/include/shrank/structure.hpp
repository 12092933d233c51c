#pragma once

#include "shrank/differential.hpp"
#include "shrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shrank {

// ---------------------------------------------------------------------------
// Salamon notation for real nilpotent Lie algebras
// ---------------------------------------------------------------------------

struct SalamonTerm {
	int sign;  // +1 or -1
	int i, j;  // 1-based, i < j
};

/// Real structure equations de^k = sum sign * e^i ^ e^j, parsed from "(0,0,0,12,13,23)".
struct SalamonSpec {
	std::string text;
	std::vector<std::vector<SalamonTerm>> de;

	int dim() const { return static_cast<int>(de.size()); }
	bool is_abelian() const {
		for (auto& row : de)
			if (!row.empty()) return false;
		return true;
	}
	/// "de^4 = e^12" per generator, "0" for closed generators.
	std::vector<std::string> equations() const {
		std::vector<std::string> out;
		for (int k = 0; k < dim(); ++k) {
			std::string s = "de^" + std::to_string(k + 1) + " = ";
			if (de[k].empty()) s += "0";
			for (std::size_t t = 0; t < de[k].size(); ++t) {
				auto& term = de[k][t];
				if (t > 0) s += term.sign > 0 ? " + " : " - ";
				else if (term.sign < 0) s += "-";
				s += "e^" + std::to_string(term.i) + std::to_string(term.j);
			}
			out.push_back(s);
		}
		return out;
	}
};

namespace detail {

using RealForm = std::map<BasisMask, Rational, BasisOrder>;

inline RealForm real_d(const SalamonSpec& spec, const RealForm& a) {
	RealForm out;
	for (auto& [m, c] : a) {
		int position = 0;
		for (BasisMask rest = m; rest; rest &= rest - 1, ++position) {
			int g = std::countr_zero(rest);
			BasisMask bit = BasisMask(1) << g;
			BasisMask before = m & (bit - 1), after = m & ~((bit << 1) - 1);
			for (auto& term : spec.de[g]) {
				BasisMask k = (BasisMask(1) << (term.i - 1)) | (BasisMask(1) << (term.j - 1));
				if ((k & before) || (k & after)) continue;
				int s = ((position % 2) ? -1 : 1) * term.sign * merge_sign(before, k) * merge_sign(before | k, after);
				Rational& slot = out[before | k | after];
				slot += s * c;
				if (sgn(slot) == 0) out.erase(before | k | after);
			}
		}
	}
	return out;
}

}  // namespace detail

/// Grammar: "(" entry ("," entry)* ")", entry = "0" | [sign] pair (sign pair)*,
/// pair = two digits. Indices must lie below the entry's position.
inline SalamonSpec parse_salamon(const std::string& text) {
	SalamonSpec spec;
	spec.text = text;
	std::size_t pos = 0;
	auto fail = [&](const std::string& what) {
		throw InputError("Salamon parse error at position " + std::to_string(pos) + ": " + what + " in '" + text + "'");
	};
	auto skip = [&] {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
	};
	skip();
	if (pos >= text.size() || text[pos] != '(') fail("expected '('");
	++pos;
	for (;;) {
		skip();
		int k = spec.dim() + 1;
		std::vector<SalamonTerm> row;
		if (pos < text.size() && text[pos] == '0' && (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
			++pos;
		} else {
			bool first = true;
			for (;;) {
				skip();
				int sign = 1;
				if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
					sign = text[pos] == '-' ? -1 : 1;
					++pos;
					skip();
				} else if (!first) {
					break;
				}
				if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
				    !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
					fail("expected a two-digit index pair");
				int i = text[pos] - '0', j = text[pos + 1] - '0';
				if (i == 0 || j == 0) fail("indices are 1-based");
				if (i == j) fail("repeated index in pair");
				if (i >= k || j >= k)
					fail("index " + std::to_string(std::max(i, j)) + " not below position " + std::to_string(k));
				pos += 2;
				if (i > j) {
					std::swap(i, j);
					sign = -sign;
				}
				row.push_back({sign, i, j});
				first = false;
			}
		}
		spec.de.push_back(std::move(row));
		skip();
		if (pos < text.size() && text[pos] == ',') {
			++pos;
			continue;
		}
		if (pos < text.size() && text[pos] == ')') {
			++pos;
			break;
		}
		fail("expected ',' or ')'");
	}
	skip();
	if (pos != text.size()) fail("trailing characters");
	if (spec.dim() > 9) fail("at most 9 generators are supported");

	for (int k = 0; k < spec.dim(); ++k) {
		detail::RealForm dek;
		for (auto& t : spec.de[k]) {
			BasisMask m = (BasisMask(1) << (t.i - 1)) | (BasisMask(1) << (t.j - 1));
			dek[m] += t.sign;
			if (sgn(dek[m]) == 0) dek.erase(m);
		}
		auto dd = detail::real_d(spec, dek);
		if (!dd.empty()) {
			auto [m, c] = *dd.begin();
			std::string idx;
			for (int b = 0; b < spec.dim(); ++b)
				if (m & (BasisMask(1) << b)) idx += std::to_string(b + 1);
			throw InputError("Jacobi identity fails: d(de^" + std::to_string(k + 1) + ") has coefficient " +
			                 c.get_str() + " on e^" + idx + " in '" + text + "'");
		}
	}
	return spec;
}

// ---------------------------------------------------------------------------
// Complex-structure families on 6-dimensional nilpotent Lie algebras
// ---------------------------------------------------------------------------

enum class Family { P, I, II, III };

inline std::string to_string(Family f) {
	switch (f) {
		case Family::P: return "P";
		case Family::I: return "I";
		case Family::II: return "II";
		case Family::III: return "III";
	}
	return "?";
}

inline Family parse_family(const std::string& s) {
	if (s == "P") return Family::P;
	if (s == "I") return Family::I;
	if (s == "II") return Family::II;
	if (s == "III") return Family::III;
	throw InputError("unknown family '" + s + "' (expected P, I, II or III)");
}

/// Family parameters. A used parameter left empty is symbolic; parameters not
/// used by the family must stay empty.
struct FamilyParams {
	Family family = Family::P;
	std::optional<Rational> rho;
	std::optional<Rational> lambda;
	std::optional<GaussianRational> D;
	std::optional<GaussianRational> B;
	std::optional<Rational> c;
	std::optional<Rational> eps;
	int sigma = 1;

	bool uses(const std::string& name) const {
		switch (family) {
			case Family::P: return name == "rho";
			case Family::I: return name == "rho" || name == "lambda" || name == "D";
			case Family::II: return name == "rho" || name == "B" || name == "c";
			case Family::III: return name == "eps" || name == "sigma";
		}
		return false;
	}

	bool is_concrete() const {
		switch (family) {
			case Family::P: return rho.has_value();
			case Family::I: return rho && lambda && D;
			case Family::II: return rho && B && c;
			case Family::III: return eps.has_value();
		}
		return false;
	}

	void validate() const {
		auto unused = [&](bool set, const char* name) {
			if (set && !uses(name))
				throw InputError(std::string("parameter '") + name + "' is not used by family " + to_string(family));
		};
		unused(rho.has_value(), "rho");
		unused(lambda.has_value(), "lambda");
		unused(D.has_value(), "D");
		unused(B.has_value(), "B");
		unused(c.has_value(), "c");
		unused(eps.has_value(), "eps");
		if (rho && *rho != 0 && *rho != 1) throw InputError("rho must be 0 or 1");
		if (eps && *eps != 0 && *eps != 1) throw InputError("eps must be 0 or 1");
		if (lambda && sgn(*lambda) < 0) throw InputError("lambda must be >= 0");
		if (c && sgn(*c) < 0) throw InputError("c must be >= 0");
		if (D && sgn(D->im) < 0) throw InputError("D must have Im D >= 0");
		if (sigma != 1 && sigma != -1) throw InputError("sign must be +1 or -1");
		if (family == Family::II && rho && B && c && *rho == 0 && B->is_zero() && sgn(*c) == 0)
			throw InputError("family II requires (rho,B,c) != (0,0,0)");
	}

	/// Coefficient to use in the structure equations: the value, or the symbol.
	Polynomial value(const std::string& name) const {
		auto real = [&](const std::optional<Rational>& v) { return v ? Polynomial(*v) : Polynomial::var(name); };
		if (name == "rho") return real(rho);
		if (name == "lambda") return real(lambda);
		if (name == "c") return real(c);
		if (name == "eps") return real(eps);
		if (name == "D") return D ? Polynomial(*D) : Polynomial::var("D");
		if (name == "B") return B ? Polynomial(*B) : Polynomial::var("B");
		if (name == "sigma") return Polynomial(long(sigma));
		throw std::invalid_argument("unknown parameter " + name);
	}

	std::string describe() const {
		auto r = [](const std::optional<Rational>& v, const char* n) { return v ? v->get_str() : std::string(n); };
		auto g = [](const std::optional<GaussianRational>& v, const char* n) { return v ? to_string(*v) : std::string(n); };
		switch (family) {
			case Family::P: return "(P) rho=" + r(rho, "rho");
			case Family::I:
				return "(I) (rho,lambda,D)=(" + r(rho, "rho") + "," + r(lambda, "lambda") + "," + g(D, "D") + ")";
			case Family::II: return "(II) (rho,B,c)=(" + r(rho, "rho") + "," + g(B, "B") + "," + r(c, "c") + ")";
			case Family::III: return std::string("(III) eps=") + r(eps, "eps") + " sign=" + (sigma > 0 ? "+" : "-");
		}
		return "?";
	}
};

/// One complex structure on a nilpotent Lie algebra: its differential plus provenance.
struct AlgebraInstance {
	int n = 3;
	DifferentialSpec spec;
	std::optional<FamilyParams> params;
	std::optional<SalamonSpec> salamon;
	std::string label;
	/// Cases whose manifold-level ranks are not covered by the invariant reduction.
	bool invariant_level_only = false;

	bool is_concrete() const {
		if (params) return params->is_concrete();
		return true;
	}
};

inline AlgebraInstance instantiate_family(const FamilyParams& params) {
	params.validate();
	constexpr int n = 3;
	auto w = [](int a, bool abar, int b, bool bbar, Polynomial coeff) {
		std::vector<int> hol, anti;
		(abar ? anti : hol).push_back(a);
		(bbar ? anti : hol).push_back(b);
		// phi^a ^ phibar^b etc. with the sign of reordering into canonical form
		Form f = Form::scalar(n, std::move(coeff));
		f = wedge(f, abar ? Form::phibar(n, a) : Form::phi(n, a));
		f = wedge(f, bbar ? Form::phibar(n, b) : Form::phi(n, b));
		return f;
	};
	const Polynomial i = Polynomial::i();
	std::vector<Form> images(n, Form(n));
	switch (params.family) {
		case Family::P:
			images[2] = w(1, false, 2, false, params.value("rho"));
			break;
		case Family::I:
			images[2] = w(1, false, 2, false, params.value("rho")) + w(1, false, 1, true, 1) +
			            w(1, false, 2, true, params.value("lambda")) + w(2, false, 2, true, params.value("D"));
			break;
		case Family::II:
			images[1] = w(1, false, 1, true, 1);
			images[2] = w(1, false, 2, false, params.value("rho")) + w(1, false, 2, true, params.value("B")) +
			            w(2, false, 1, true, params.value("c"));
			break;
		case Family::III: {
			Polynomial s = params.value("sigma");
			images[1] = w(1, false, 3, false, 1) + w(1, false, 3, true, 1);
			images[2] = w(1, false, 1, true, params.value("eps")) + w(1, false, 2, true, s * i) - w(2, false, 1, true, s * i);
			break;
		}
	}
	AlgebraInstance inst{n, DifferentialSpec(std::move(images)), params, std::nullopt, params.describe(), false};
	if (params.family == Family::II && params.rho && params.B && params.c && *params.rho == 1 &&
	    *params.B == GaussianRational(1) && sgn(*params.c) == 0)
		inst.invariant_level_only = true;
	return inst;
}

/// Instance for a real algebra given in Salamon notation. Only the abelian
/// algebra carries a canonical complex structure here; non-abelian algebras
/// need an explicit complex structure, which enters through FamilyParams.
inline AlgebraInstance instantiate_salamon(const SalamonSpec& s) {
	if (s.dim() % 2 != 0) throw InputError("Salamon algebra must have even dimension to carry a complex structure");
	if (!s.is_abelian())
		throw InputError("no complex structure attached to '" + s.text + "'; use --family to choose one");
	int n = s.dim() / 2;
	return AlgebraInstance{n, DifferentialSpec::abelian(n), std::nullopt, s, "salamon " + s.text, false};
}

/// The abelian algebra of complex dimension n.
inline AlgebraInstance abelian_instance(int n) {
	std::string text = "(";
	for (int k = 0; k < 2 * n; ++k) text += k ? ",0" : "0";
	return instantiate_salamon(parse_salamon(text + ")"));
}

// ---------------------------------------------------------------------------
// Generic degenerate metric
// ---------------------------------------------------------------------------

/// i r2 phi^{1|1} + i s2 phi^{2|2} + i t2 phi^{3|3} + (u phi^{1|2} - ubar phi^{2|1})
/// + (v phi^{2|3} - vbar phi^{3|2}) + (z phi^{1|3} - zbar phi^{3|1}).
inline Form generic_metric() {
	constexpr int n = 3;
	auto P = [](const char* s) { return Polynomial::var(s); };
	const Polynomial i = Polynomial::i();
	return Form::basis(n, {1}, {1}, i * P("r2")) + Form::basis(n, {2}, {2}, i * P("s2")) +
	       Form::basis(n, {3}, {3}, i * P("t2")) + Form::basis(n, {1}, {2}, P("u")) -
	       Form::basis(n, {2}, {1}, P("ubar")) + Form::basis(n, {2}, {3}, P("v")) -
	       Form::basis(n, {3}, {2}, P("vbar")) + Form::basis(n, {1}, {3}, P("z")) -
	       Form::basis(n, {3}, {1}, P("zbar"));
}

/// The seven principal-minor conditions of the generic metric, in the order
/// r2, s2, t2, r2 s2 - |u|^2, s2 t2 - |v|^2, r2 t2 - |z|^2, and the determinant
/// r2 s2 t2 + 2 Re(i ubar vbar z) - t2|u|^2 - r2|v|^2 - s2|z|^2.
inline std::vector<Polynomial> positivity_conditions() {
	auto P = [](const char* s) { return Polynomial::var(s); };
	const Polynomial i = Polynomial::i();
	Polynomial cross = i * P("ubar") * P("vbar") * P("z");
	return {P("r2"),
	        P("s2"),
	        P("t2"),
	        P("r2") * P("s2") - P("u") * P("ubar"),
	        P("s2") * P("t2") - P("v") * P("vbar"),
	        P("r2") * P("t2") - P("z") * P("zbar"),
	        P("r2") * P("s2") * P("t2") + cross + cross.conj() - P("t2") * P("u") * P("ubar") -
	            P("r2") * P("v") * P("vbar") - P("s2") * P("z") * P("zbar")};
}

// ---------------------------------------------------------------------------
// Real forms of degree one
// ---------------------------------------------------------------------------

/// Real 1-form sum_j (a_j phi^j + conj(a_j) phibar^j) from its n complex coefficients.
inline Form real_one_form(int n, const std::vector<GaussianRational>& a) {
	Form f(n);
	for (int j = 0; j < n; ++j) {
		f += Form::phi(n, j + 1).map_coefficients([&](const Polynomial& c) { return c * Polynomial(a[j]); });
		f += Form::phibar(n, j + 1).map_coefficients([&](const Polynomial& c) { return c * Polynomial(a[j].conj()); });
	}
	return f;
}

/// Real coordinates (Re a_1, Im a_1, ..., Re a_n, Im a_n) of a real 1-form.
inline Form real_one_form_from_coords(int n, const std::vector<Rational>& x) {
	std::vector<GaussianRational> a;
	for (int j = 0; j < n; ++j) a.emplace_back(x[2 * j], x[2 * j + 1]);
	return real_one_form(n, a);
}

/// Complex coefficients of phi^1..phi^n in a 1-form.
inline std::vector<GaussianRational> one_form_coefficients(const Form& f) {
	std::vector<GaussianRational> a;
	for (int j = 1; j <= f.dim(); ++j) {
		auto v = f.coefficient({j}, {}).constant_value();
		if (!v) throw InputError("one-form coefficient is not numeric");
		a.push_back(*v);
	}
	return a;
}

/// Complex coordinates of a form of fixed degree on all basis masks of that degree.
inline std::vector<BasisMask> masks_of_degree(int n, int degree) {
	std::vector<BasisMask> out;
	for (BasisMask m = 0; m < (BasisMask(1) << (2 * n)); ++m)
		if (mask_degree(m) == degree) out.push_back(m);
	std::sort(out.begin(), out.end(), BasisOrder{});
	return out;
}

/// Numeric value of every coefficient; throws if any coefficient is symbolic.
inline GaussianRational numeric_coefficient(const Form& f, BasisMask m) {
	auto v = f.coefficient(m).constant_value();
	if (!v) throw InputError("form coefficient '" + to_string(f.coefficient(m)) + "' is symbolic; bind all parameters");
	return *v;
}

/// Rational basis (in real coordinates, see real_one_form_from_coords) of the
/// real closed 1-forms, returned as forms.
inline std::vector<Form> closed_one_forms(const AlgebraInstance& inst) {
	int n = inst.n;
	auto targets = masks_of_degree(n, 2);
	std::vector<std::vector<Rational>> columns;
	for (int k = 0; k < 2 * n; ++k) {
		std::vector<Rational> x(2 * n, Rational(0));
		x[k] = 1;
		Form dtheta = inst.spec.d(real_one_form_from_coords(n, x));
		std::vector<Rational> col;
		for (auto m : targets) {
			auto v = numeric_coefficient(dtheta, m);
			col.push_back(v.re);
			col.push_back(v.im);
		}
		columns.push_back(std::move(col));
	}
	RationalMatrix a(columns.front().size(), 2 * n);
	for (std::size_t c = 0; c < columns.size(); ++c)
		for (std::size_t r = 0; r < columns[c].size(); ++r) a(r, c) = columns[c][r];
	std::vector<Form> out;
	for (auto& v : a.nullspace()) out.push_back(real_one_form_from_coords(n, v));
	return out;
}

}  // namespace shrank
