#pragma once

#include "shrank/cone.hpp"
#include "shrank/hermitian.hpp"
#include "shrank/linalg.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace shrank {

/// Dense univariate polynomial over Q(i), ascending coefficients.
using UniPoly = std::vector<GaussianRational>;

inline UniPoly trim(UniPoly p) {
	while (!p.empty() && p.back().is_zero()) p.pop_back();
	return p;
}

inline UniPoly multiply(const UniPoly& a, const UniPoly& b) {
	if (a.empty() || b.empty()) return {};
	UniPoly out(a.size() + b.size() - 1);
	for (std::size_t j = 0; j < a.size(); ++j)
		for (std::size_t k = 0; k < b.size(); ++k) out[j + k] += a[j] * b[k];
	return trim(out);
}

/// Remainder of a modulo the monic polynomial m.
inline UniPoly remainder(UniPoly a, const UniPoly& m) {
	a = trim(a);
	std::size_t dm = m.size() - 1;
	while (a.size() > dm) {
		GaussianRational lead = a.back();
		std::size_t shift = a.size() - 1 - dm;
		for (std::size_t k = 0; k <= dm; ++k) a[shift + k] -= lead * m[k];
		a = trim(a);
	}
	return a;
}

inline UniPoly conj(const UniPoly& p) {
	UniPoly out;
	for (auto& c : p) out.push_back(c.conj());
	return out;
}

inline std::string to_string(const UniPoly& p) {
	std::string s;
	for (std::size_t k = p.size(); k-- > 0;) {
		if (p[k].is_zero()) continue;
		std::string c = to_string(p[k]);
		bool compound = p[k].re != 0 && p[k].im != 0;
		if (compound) c = "(" + c + ")";
		if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
		else if (c[0] == '-') s += "-";
		if (c[0] == '-') c.erase(0, 1);
		if (k == 0 || c != "1") s += c;
		if (k >= 1) s += "x";
		if (k >= 2) s += "^" + std::to_string(k);
	}
	return s.empty() ? "0" : s;
}

/// x^2 - (1+i) x + 1, the polynomial of alpha and beta.
inline UniPoly suspension_quadratic() { return {GaussianRational(1), GaussianRational(-1, -1), GaussianRational(1)}; }

/// x^4 - 2x^3 + 4x^2 - 2x + 1.
inline UniPoly suspension_quartic() { return {GaussianRational(1), -2, 4, -2, 1}; }

/// Columns e2, e3, e4, (-1, 2, -4, 2): the action of f on v_0..v_3.
inline RationalMatrix companion_matrix() {
	RationalMatrix c(4, 4);
	for (int k = 0; k < 3; ++k) c(k + 1, k) = 1;
	const long last[4] = {-1, 2, -4, 2};
	for (int k = 0; k < 4; ++k) c(k, 3) = last[k];
	return c;
}

/// Characteristic polynomial det(xI - A), ascending, by Faddeev-LeVerrier.
inline std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
	std::size_t n = a.rows();
	std::vector<Rational> c(n + 1, Rational(0));
	c[n] = 1;
	RationalMatrix m(n, n);
	for (std::size_t k = 1; k <= n; ++k) {
		RationalMatrix next(n, n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t s = 0; s < n; ++s) {
				Rational v = 0;
				for (std::size_t t = 0; t < n; ++t) v += a(r, t) * m(t, s);
				next(r, s) = v + (r == s ? c[n - k + 1] : Rational(0));
			}
		m = next;
		Rational tr = 0;
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t t = 0; t < n; ++t) tr += a(r, t) * m(t, r);
		c[n - k] = -tr / Rational(static_cast<long>(k));
	}
	return c;
}

struct SuspensionStep {
	std::string name;
	bool passed = false;
	std::string detail;
};

struct SuspensionReport {
	std::vector<SuspensionStep> steps;
	std::string verdict;
	std::vector<std::string> cited;
	bool ok() const {
		for (auto& s : steps)
			if (!s.passed) return false;
		return true;
	}
};

namespace detail {

using HPComplex = boost::multiprecision::cpp_complex_100;
using HPReal = boost::multiprecision::cpp_bin_float_100;

inline std::string sci(const HPReal& x, int digits = 3) {
	std::ostringstream os;
	os << std::scientific << std::setprecision(digits) << x;
	return os.str();
}

inline std::string fixed(const HPReal& x, int digits) {
	std::ostringstream os;
	os << std::fixed << std::setprecision(digits) << x;
	return os.str();
}

inline HPComplex evaluate(const UniPoly& p, const HPComplex& x) {
	HPComplex v(0);
	for (std::size_t k = p.size(); k-- > 0;)
		v = v * x + HPComplex(HPReal(p[k].re.get_str()), HPReal(p[k].im.get_str()));
	return v;
}

inline std::string join(const std::vector<Rational>& v) {
	std::string s;
	for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get_str();
	return s;
}

}  // namespace detail

/// Checks the algebraic steps of the torus-suspension example.
inline SuspensionReport verify_suspension() {
	using detail::HPComplex;
	using detail::HPReal;
	SuspensionReport rep;
	auto step = [&](std::string name, bool ok, std::string detail) { rep.steps.push_back({std::move(name), ok, std::move(detail)}); };

	UniPoly q = suspension_quadratic(), quartic = suspension_quartic();
	UniPoly product = multiply(q, conj(q));
	step("quartic factorization", product == quartic, "(" + to_string(q) + ")(" + to_string(conj(q)) + ") = " + to_string(product));

	// x^4 = 2x^3 - 4x^2 + 2x - 1 modulo both quadratics, so f(v_3) = 2v_3 - 4v_2 + 2v_1 - v_0.
	UniPoly relation = {GaussianRational(1), -2, 4, -2, 1};
	bool rel_a = remainder(relation, q).empty(), rel_b = remainder(relation, conj(q)).empty();
	step("lattice relation", rel_a && rel_b, "(alpha^4, conj(beta)^4) = 2 v3 - 4 v2 + 2 v1 - v0");

	RationalMatrix c = companion_matrix();
	Rational det = c.determinant();
	auto chi = characteristic_polynomial(c);
	std::vector<Rational> expected{1, -2, 4, -2, 1};
	step("companion matrix", abs(det) == 1 && chi == expected,
	     "integer matrix, det = " + det.get_str() + ", characteristic polynomial coefficients (ascending) " + detail::join(chi));

	step("Vieta", q[0] == GaussianRational(1) && q[1] == GaussianRational(-1, -1),
	     "alpha + beta = 1+i and alpha beta = 1 exactly");

	HPComplex disc = HPComplex(-4, 2);  // (1+i)^2 - 4
	HPComplex root = sqrt(disc);
	HPComplex r1 = (HPComplex(1, 1) + root) / 2, r2 = (HPComplex(1, 1) - root) / 2;
	HPComplex alpha = abs(r1) >= abs(r2) ? r1 : r2, beta = abs(r1) >= abs(r2) ? r2 : r1;
	HPReal res = std::max(abs(detail::evaluate(q, alpha)), abs(detail::evaluate(q, beta)));
	HPReal prod = abs(alpha * beta - HPComplex(1)), sum = abs(alpha + beta - HPComplex(1, 1));
	HPComplex beta_bar(beta.real(), -beta.imag());
	HPReal quartic_res = std::max(abs(detail::evaluate(quartic, alpha)), abs(detail::evaluate(quartic, beta_bar)));
	HPReal tol("1e-40");
	step("roots (100 digits)", res < tol && prod < tol && sum < tol && quartic_res < tol,
	     "|q(alpha)|, |q(beta)| <= " + detail::sci(res) + ", |alpha beta - 1| = " + detail::sci(prod) +
	         ", |alpha + beta - (1+i)| = " + detail::sci(sum) + ", quartic residual " + detail::sci(quartic_res));

	HPReal a2 = norm(alpha), b2 = norm(beta);
	// |alpha| = 1 would give beta = 1/alpha = conj(alpha), so alpha + beta would be real.
	bool trace_not_real = sgn((-q[1]).im) != 0;
	step("|alpha|^2 != 1", trace_not_real && abs(a2 - 1) > HPReal("0.1") && abs(b2 - 1) > HPReal("0.1"),
	     "Im(alpha + beta) = " + (-q[1]).im.get_str() + " != 0; |alpha|^2 = " + detail::fixed(a2, 40) + ", |beta|^2 = " +
	         detail::fixed(b2, 40));

	// f* on dz^j ^ dzbar^k multiplies by a_j conj(a_k), a = (alpha, conj(beta)).
	const std::vector<std::string> names{"dz1^dzbar1", "dz1^dzbar2", "dz2^dzbar1", "dz2^dzbar2"};
	// Off-diagonal eigenvalue alpha beta is the constant term of q; the diagonal ones are 1 only if |alpha| = 1.
	bool mixed_unit = q[0] == GaussianRational(1), diagonal_unit = !trace_not_real;
	std::vector<bool> unit{diagonal_unit, mixed_unit, mixed_unit, diagonal_unit};
	std::vector<std::string> fixed_basis;
	for (std::size_t k = 0; k < 4; ++k)
		if (unit[k]) fixed_basis.push_back(names[k]);
	step("fixed subspace", trace_not_real && fixed_basis == std::vector<std::string>{"dz1^dzbar2", "dz2^dzbar1"},
	     "eigenvalues (|alpha|^2, alpha beta, conj(alpha beta), |beta|^2) = (" + detail::fixed(a2, 6) + ", 1, 1, " +
	         detail::fixed(b2, 6) + "); fixed space spanned by " + fixed_basis[0] + ", " + fixed_basis[1]);

	// Hermitian matrices [[0, c], [conj c, 0]]: coordinates Re c, Im c.
	LinearSlice fixed2 = LinearSlice::span(2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
	auto cert2 = max_rank_over_cone(fixed2);
	auto block = [](GaussianRational cval) {
		GaussianMatrix h(2, 2);
		h(0, 1) = cval;
		h(1, 0) = cval.conj();
		return HermitianCoeffMatrix(h);
	};
	bool zero_psd = is_psd_exact(block(GaussianRational(0)));
	bool one_psd = is_psd_exact(block(GaussianRational(1)));
	bool mixed_psd = is_psd_exact(block(GaussianRational(1, 1)));
	step("PSD obstruction", cert2.exact() && cert2.upper == 0 && zero_psd && !one_psd && !mixed_psd,
	     "max rank of a PSD form on the fixed space is " + std::to_string(cert2.upper) +
	         " (diagonal entries forced to 0, 2x2 minor -|c|^2); c = 0 PSD, c = 1 and c = 1+i not PSD");

	// On (z1, z2, w): invariant forms have no dz1^dzbar1, dz2^dzbar2 component.
	LinearSlice invariant3 = LinearSlice::kernel(3, {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}});
	auto cert3 = max_rank_over_cone(invariant3);
	GaussianMatrix w(3, 3);
	w(2, 2) = 1;
	HermitianCoeffMatrix witness(w);
	bool witness_ok = is_psd_exact(witness) && rank_exact(witness) == 1 && invariant3.contains(witness.real_coords());
	step("rank-1 witness", witness_ok && cert3.exact() && cert3.upper == 1,
	     "i dw^dwbar is closed, f-invariant, PSD of rank 1; invariant PSD forms have rank <= " + std::to_string(cert3.upper));

	rep.cited = {"the Z^2 action (f^m(z), w + l + m tau) is free and properly discontinuous",
	             "averaging replaces a Kahler-rank form by an invariant one (omega = omega_inv + d eta)"};
	rep.verdict = rep.ok() ? "Kr(M) = 1 (algebraic steps verified; analytic steps cited)" : "verification failed";
	return rep;
}

inline std::string suspension_text(const SuspensionReport& rep) {
	std::ostringstream os;
	for (auto& s : rep.steps) os << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
	for (auto& c : rep.cited) os << "cited: " << c << "\n";
	os << "verdict: " << rep.verdict << "\n";
	return os.str();
}

}  // namespace shrank
