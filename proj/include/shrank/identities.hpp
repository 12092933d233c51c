#pragma once

#include "shrank/linalg.hpp"
#include "shrank/structure.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace shrank {

struct IdentityResult {
	std::string name;
	std::string family;
	std::size_t instances = 0;
	std::size_t failures = 0;
	std::string first_failure;
	bool ok() const { return failures == 0; }
};

struct IdentityConfig {
	std::uint64_t seed = 42;
	std::size_t instances = 200;
};

namespace detail {

class FormSampler {
public:
	explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

	long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

	GaussianRational gaussian(long bound = 3) {
		return {Rational(integer(-bound, bound)), Rational(integer(-bound, bound))};
	}

	Rational small_rational(long lo, long hi) {
		Rational q(integer(lo, hi), integer(1, 3));
		q.canonicalize();
		return q;
	}

	/// Sparse homogeneous form with one to four terms.
	Form form(int n, int degree) {
		auto masks = masks_of_degree(n, degree);
		Form f(n);
		long terms = integer(1, 4);
		for (long k = 0; k < terms; ++k) {
			auto m = masks[integer(0, static_cast<long>(masks.size()) - 1)];
			f.add_term(m, Polynomial(gaussian()));
		}
		return f;
	}

	/// Real 1-form with random coefficients.
	Form real_one(int n) {
		std::vector<GaussianRational> a;
		for (int j = 0; j < n; ++j) a.push_back(gaussian());
		return real_one_form(n, a);
	}

	/// Random real combination of the given basis.
	Form combination(int n, const std::vector<Form>& basis) {
		Form f(n);
		for (auto& b : basis) f += Polynomial(Rational(integer(-3, 3))) * b;
		return f;
	}

	FamilyParams params(Family family) {
		for (;;) {
			FamilyParams p;
			p.family = family;
			switch (family) {
				case Family::P: p.rho = Rational(integer(0, 1)); break;
				case Family::I:
					p.rho = Rational(integer(0, 1));
					p.lambda = small_rational(0, 3);
					p.D = GaussianRational(small_rational(-3, 3), small_rational(0, 3));
					break;
				case Family::II:
					p.rho = Rational(integer(0, 1));
					p.B = GaussianRational(small_rational(-3, 3), small_rational(-3, 3));
					p.c = small_rational(0, 3);
					break;
				case Family::III:
					p.eps = Rational(integer(0, 1));
					p.sigma = integer(0, 1) ? 1 : -1;
					break;
			}
			try {
				p.validate();
				return p;
			} catch (const InputError&) {
			}
		}
	}

private:
	std::mt19937_64 rng_;
};

inline long binomial(long n, long k) {
	long r = 1;
	for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
	return r;
}

inline Form scaled(const Rational& s, const Form& f) { return Polynomial(s) * f; }

/// Basis of {w of degree 2 : d_theta w = 0}.
inline std::vector<Form> twisted_closed_two_forms(const DifferentialSpec& spec, const Form& theta) {
	int n = spec.dim();
	auto sources = masks_of_degree(n, 2), targets = masks_of_degree(n, 3);
	GaussianMatrix a(targets.size(), sources.size());
	for (std::size_t col = 0; col < sources.size(); ++col) {
		Form b(n);
		b.add_term(sources[col], Polynomial(1));
		Form img = spec.twisted(theta, b);
		for (std::size_t row = 0; row < targets.size(); ++row) a(row, col) = numeric_coefficient(img, targets[row]);
	}
	std::vector<Form> out;
	for (auto& v : a.nullspace()) {
		Form w(n);
		for (std::size_t k = 0; k < v.size(); ++k) w.add_term(sources[k], Polynomial(v[k]));
		out.push_back(std::move(w));
	}
	return out;
}

/// phi = sum_{t=1..k} C(k, k-t) wt^{k-t} ^ alpha ^ (d_{j theta} alpha)^{t-1}, with
/// j = 1 or j = t-1. Both agree since alpha ^ theta ^ alpha = 0.
inline Form expansion_potential(const DifferentialSpec& spec, const Form& theta, const Form& wt, const Form& alpha, int k,
                                bool literal) {
	int n = spec.dim();
	Form phi(n);
	for (int t = 1; t <= k; ++t) {
		Form twist = literal ? scaled(Rational(t - 1), theta) : theta;
		Form da = spec.twisted(twist, alpha);
		Form term = wedge(power(wt, k - t), alpha);
		term = wedge(term, power(da, t - 1));
		phi += scaled(Rational(binomial(k, k - t)), term);
	}
	return phi;
}

}  // namespace detail

/// Randomized exact checks of the differential identities on every family.
inline std::vector<IdentityResult> check_identities(const IdentityConfig& config = {}) {
	std::vector<IdentityResult> results;
	const std::vector<Family> families{Family::P, Family::I, Family::II, Family::III};
	std::uint64_t salt = 0;
	for (auto family : families) {
		std::string fam = "(" + to_string(family) + ")";
		detail::FormSampler rng(config.seed + 0x9e3779b97f4a7c15ULL * ++salt);

		std::vector<IdentityResult> local;
		auto slot = [&](const std::string& name) -> IdentityResult& {
			for (auto& r : local)
				if (r.name == name) return r;
			local.push_back({name, fam, 0, 0, {}});
			return local.back();
		};
		auto record = [&](const std::string& name, bool holds, const std::string& where) {
			auto& r = slot(name);
			++r.instances;
			if (!holds) {
				++r.failures;
				if (r.first_failure.empty()) r.first_failure = where;
			}
		};

		for (std::size_t it = 0; it < config.instances; ++it) {
			auto params = rng.params(family);
			auto inst = instantiate_family(params);
			const auto& d = inst.spec;
			int n = inst.n;
			std::string where = inst.label + " instance " + std::to_string(it);

			int da = static_cast<int>(rng.integer(0, 2 * n)), db = static_cast<int>(rng.integer(0, 2 * n - da));
			Form a = rng.form(n, da), b = rng.form(n, db);
			Form c = rng.form(n, static_cast<int>(rng.integer(0, 2 * n - 2)));

			record("d^2 = 0", d.d(d.d(a)).is_zero(), where);
			record("del^2 = 0", d.del(d.del(a)).is_zero(), where);
			record("delbar^2 = 0", d.delbar(d.delbar(a)).is_zero(), where);
			record("del delbar + delbar del = 0", (d.del(d.delbar(a)) + d.delbar(d.del(a))).is_zero(), where);

			Rational sign(da % 2 ? -1 : 1);
			record("graded Leibniz", d.d(wedge(a, b)) == wedge(d.d(a), b) + detail::scaled(sign, wedge(a, d.d(b))), where);

			auto closed = closed_one_forms(inst);
			Form theta = rng.combination(n, closed);
			long k = rng.integer(-3, 3), h = rng.integer(-3, 3);
			Form lhs = d.twisted(detail::scaled(Rational(k), theta), wedge(a, b));
			Form rhs = wedge(d.twisted(detail::scaled(Rational(h), theta), a), b) +
			           detail::scaled(sign, wedge(a, d.twisted(detail::scaled(Rational(k - h), theta), b)));
			record("twisted Leibniz", lhs == rhs, where);

			Form any_theta = rng.real_one(n);
			record("d_theta^2 = -(d theta)^", d.twisted(any_theta, d.twisted(any_theta, c)) == -wedge(d.d(any_theta), c), where);

			Form alpha = rng.form(n, 1);
			auto kernel = detail::twisted_closed_two_forms(d, theta);
			Form wt = rng.combination(n, kernel);
			Form what = wt + d.twisted(theta, alpha);
			for (int kk : {2, 3}) {
				Form target = power(what, kk) - power(wt, kk);
				Form ktheta = detail::scaled(Rational(kk), theta);
				Form phi = detail::expansion_potential(d, theta, wt, alpha, kk, false);
				record("omega-hat expansion k=" + std::to_string(kk), d.twisted(ktheta, phi) == target, where);
				Form phi_lit = detail::expansion_potential(d, theta, wt, alpha, kk, true);
				record("omega-hat expansion k=" + std::to_string(kk) + ", subscript (t-1)theta", d.twisted(ktheta, phi_lit) == target,
				       where);
			}
		}
		for (auto& r : local) results.push_back(std::move(r));
	}
	return results;
}

inline bool identities_ok(const std::vector<IdentityResult>& results) {
	for (auto& r : results)
		if (!r.ok()) return false;
	return true;
}

}  // namespace shrank
