#pragma once

#include "shrank/cone.hpp"
#include "shrank/structure.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace shrank {

enum class RankKind { kahler, hlck, skt };

inline std::string to_string(RankKind k) {
	switch (k) {
		case RankKind::kahler: return "kahler";
		case RankKind::hlck: return "hlck";
		case RankKind::skt: return "skt";
	}
	return "?";
}

inline RankKind parse_rank_kind(const std::string& s) {
	if (s == "kahler") return RankKind::kahler;
	if (s == "hlck") return RankKind::hlck;
	if (s == "skt") return RankKind::skt;
	throw InputError("unknown rank kind '" + s + "' (expected kahler, hlck or skt)");
}

namespace detail {

inline void require_concrete(const AlgebraInstance& inst) {
	if (!inst.is_concrete())
		throw InputError("rank computation needs numeric parameters; " + inst.label + " still has symbols");
}

/// Real coordinates (re, im per mask) of a numeric form on all masks of one degree.
inline RealVector form_coords(const Form& f, const std::vector<BasisMask>& masks) {
	RealVector out;
	out.reserve(2 * masks.size());
	for (auto m : masks) {
		auto v = numeric_coefficient(f, m);
		out.push_back(v.re);
		out.push_back(v.im);
	}
	return out;
}

/// Column k is op applied to the k-th real coordinate form of H.
template <class Op>
RationalMatrix operator_matrix(int n, int degree, Op&& op) {
	auto masks = masks_of_degree(n, degree);
	std::size_t N = HermitianCoeffMatrix::real_dim(n);
	RationalMatrix a(2 * masks.size(), N);
	for (std::size_t k = 0; k < N; ++k) {
		RealVector e(N, Rational(0));
		e[k] = 1;
		auto col = form_coords(op(HermitianCoeffMatrix::from_real_coords(n, e).to_form()), masks);
		for (std::size_t r = 0; r < col.size(); ++r) a(r, k) = col[r];
	}
	return a;
}

inline LinearSlice slice_from_matrix(int n, const RationalMatrix& a) {
	return LinearSlice::span(n, a.nullspace());
}

inline bool is_closed(const AlgebraInstance& inst, const Form& theta) { return inst.spec.d(theta).is_zero(); }

}  // namespace detail

/// Solutions of the closedness equation of the given kind among invariant real
/// (1,1)-forms, as a slice of Hermitian coefficient matrices. theta is the Lee
/// form and is used only for hlck.
inline LinearSlice closedness_slice(RankKind kind, const AlgebraInstance& inst, const std::optional<Form>& theta = {}) {
	detail::require_concrete(inst);
	int n = inst.n;
	switch (kind) {
		case RankKind::kahler:
			return detail::slice_from_matrix(n, detail::operator_matrix(n, 3, [&](const Form& w) { return inst.spec.d(w); }));
		case RankKind::skt:
			return detail::slice_from_matrix(n, detail::operator_matrix(n, 4, [&](const Form& w) { return inst.spec.del_delbar(w); }));
		case RankKind::hlck: {
			if (!theta) throw InputError("hlck slice needs a Lee form");
			if (theta->dim() != n || (!theta->is_zero() && theta->degree() != 1))
				throw InputError("Lee form must be a 1-form in the algebra's dimension");
			if (theta->conj() != *theta) throw InputError("Lee form must be real");
			if (!detail::is_closed(inst, *theta)) throw InputError("Lee form is not d-closed: " + to_string(inst.spec.d(*theta)));
			return detail::slice_from_matrix(
			    n, detail::operator_matrix(n, 3, [&](const Form& w) { return inst.spec.twisted(*theta, w); }));
		}
	}
	throw std::logic_error("unreachable");
}

struct HlckSweepConfig {
	std::uint64_t seed = 42;
	std::size_t sweep = 10000;
	/// Stop as soon as the certified cap is reached.
	bool stop_at_cap = true;
	/// Extra Lee forms, as complex coefficients of phi^1..phi^n, tried right after theta = 0.
	std::vector<std::vector<GaussianRational>> explicit_thetas;
	SearchConfig search;
};

struct SweepSummary {
	std::size_t evaluated = 0;
	/// Largest per-theta certified upper bound seen during the sweep.
	int max_upper = 0;
	/// Upper bound valid for every closed theta at once.
	int cap = 0;
	std::vector<ForcedZeroStep> cap_steps;
	std::size_t best_index = 0;
};

struct RankReport {
	RankKind kind = RankKind::kahler;
	std::string algebra;
	std::optional<FamilyParams> params;
	std::optional<std::string> salamon;
	ConeRankCertificate certificate;
	int lower = 0;
	int upper = 0;
	std::optional<std::vector<GaussianRational>> theta;
	std::optional<SweepSummary> sweep;
	bool invariant_level_only = false;

	std::string status() const {
		if (lower == upper) return "exact";
		return kind == RankKind::hlck ? "sweep" : "bracket";
	}

	std::string scope() const {
		std::string s = "invariant-level: ";
		s += kind == RankKind::kahler ? "Kr(g) <= Kr(X)" : kind == RankKind::hlck ? "HlcKr(g) <= HlcKr(X)" : "SKTr(g) <= SKTr(X)";
		if (invariant_level_only) s += "; manifold-level value not determined by the invariant computation";
		return s;
	}
};

namespace detail {

inline RankReport make_report(RankKind kind, const AlgebraInstance& inst) {
	RankReport r;
	r.kind = kind;
	r.algebra = inst.label;
	r.params = inst.params;
	if (inst.salamon) r.salamon = inst.salamon->text;
	r.invariant_level_only = inst.invariant_level_only;
	return r;
}

inline RankReport fixed_slice_rank(RankKind kind, const AlgebraInstance& inst, const SearchConfig& config) {
	auto r = make_report(kind, inst);
	r.certificate = max_rank_over_cone(closedness_slice(kind, inst), config);
	r.lower = r.certificate.lower;
	r.upper = r.certificate.upper;
	return r;
}

}  // namespace detail

inline RankReport kahler_rank(const AlgebraInstance& inst, const SearchConfig& config = {}) {
	return detail::fixed_slice_rank(RankKind::kahler, inst, config);
}

inline RankReport skt_rank(const AlgebraInstance& inst, const SearchConfig& config = {}) {
	return detail::fixed_slice_rank(RankKind::skt, inst, config);
}

/// Lee forms with a known role for a family: theta = phi^2 + phibar^2 for (II).
inline std::vector<std::vector<GaussianRational>> special_thetas(const AlgebraInstance& inst) {
	if (inst.params && inst.params->family == Family::II)
		return {{GaussianRational(0), GaussianRational(1), GaussianRational(0)}};
	return {};
}

/// Precomputed pieces of the twisted system: M(theta) = A0 - sum_j c_j A_j for
/// theta = sum_j c_j E_j over a basis E_j of closed real 1-forms.
class TwistedSystem {
public:
	explicit TwistedSystem(const AlgebraInstance& inst) : n_(inst.n) {
		detail::require_concrete(inst);
		closed_ = closed_one_forms(inst);
		a0_ = detail::operator_matrix(n_, 3, [&](const Form& w) { return inst.spec.d(w); });
		for (auto& e : closed_) aj_.push_back(detail::operator_matrix(n_, 3, [&](const Form& w) { return wedge(e, w); }));
	}

	int n() const { return n_; }
	const std::vector<Form>& closed_basis() const { return closed_; }

	/// Coordinates of theta in the closed basis; throws if theta is not closed.
	std::vector<Rational> coordinates(const std::vector<GaussianRational>& a) const {
		Form theta = real_one_form(n_, a);
		std::size_t m = closed_.size();
		auto masks = masks_of_degree(n_, 1);
		RationalMatrix sys(2 * masks.size(), m + 1);
		for (std::size_t j = 0; j < m; ++j) {
			auto col = detail::form_coords(closed_[j], masks);
			for (std::size_t r = 0; r < col.size(); ++r) sys(r, j) = col[r];
		}
		auto rhs = detail::form_coords(theta, masks);
		for (std::size_t r = 0; r < rhs.size(); ++r) sys(r, m) = rhs[r];
		auto pivots = sys.rref();
		if (!pivots.empty() && pivots.back() == m) throw InputError("Lee form " + to_string(theta) + " is not d-closed");
		std::vector<Rational> c(m, Rational(0));
		for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = sys(r, m);
		return c;
	}

	std::vector<GaussianRational> complex_coefficients(const std::vector<Rational>& c) const {
		Form theta(n_);
		for (std::size_t j = 0; j < c.size(); ++j)
			if (sgn(c[j]) != 0) theta += Polynomial(c[j]) * closed_[j];
		return one_form_coefficients(theta);
	}

	LinearSlice slice(const std::vector<Rational>& c) const {
		RationalMatrix m = a0_;
		for (std::size_t j = 0; j < c.size(); ++j) {
			if (sgn(c[j]) == 0) continue;
			for (std::size_t r = 0; r < m.rows(); ++r)
				for (std::size_t k = 0; k < m.cols(); ++k)
					if (sgn(aj_[j](r, k)) != 0) m(r, k) -= c[j] * aj_[j](r, k);
		}
		return detail::slice_from_matrix(n_, m);
	}

	/// Equations l^T A0 x = 0 for every l killing all A_j: they hold for every theta.
	LinearSlice theta_independent_slice() const {
		std::size_t rows = a0_.rows();
		if (aj_.empty()) return detail::slice_from_matrix(n_, a0_);
		RationalMatrix stacked(aj_.size() * a0_.cols(), rows);
		for (std::size_t j = 0; j < aj_.size(); ++j)
			for (std::size_t k = 0; k < a0_.cols(); ++k)
				for (std::size_t r = 0; r < rows; ++r) stacked(j * a0_.cols() + k, r) = aj_[j](r, k);
		std::vector<RealVector> eqs;
		for (auto& l : stacked.nullspace()) {
			RealVector e(a0_.cols(), Rational(0));
			for (std::size_t k = 0; k < a0_.cols(); ++k)
				for (std::size_t r = 0; r < rows; ++r)
					if (sgn(l[r]) != 0) e[k] += l[r] * a0_(r, k);
			eqs.push_back(std::move(e));
		}
		return LinearSlice::kernel(n_, eqs);
	}

private:
	int n_;
	std::vector<Form> closed_;
	RationalMatrix a0_;
	std::vector<RationalMatrix> aj_;
};

/// Lee-form candidates in closed-basis coordinates: theta = 0, explicit and
/// special forms, a centred integer grid, then random rationals up to the sweep size.
inline std::vector<std::vector<Rational>> theta_candidates(const TwistedSystem& sys, const std::vector<std::vector<GaussianRational>>& extra,
                                                           const HlckSweepConfig& config) {
	std::size_t m = sys.closed_basis().size();
	std::size_t total = std::max<std::size_t>(config.sweep, 1);
	std::vector<std::vector<Rational>> out;
	out.emplace_back(m, Rational(0));
	for (auto& a : extra) out.push_back(sys.coordinates(a));
	if (m == 0) return out;

	int radius = 0;
	for (;;) {
		double points = 1;
		for (std::size_t j = 0; j < m; ++j) points *= 2 * (radius + 1) + 1;
		if (points > 3000) break;
		++radius;
	}
	if (radius > 0) {
		std::vector<int> c(m, -radius);
		for (;;) {
			if (out.size() >= total) break;
			if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; })) {
				std::vector<Rational> q;
				for (int v : c) q.emplace_back(v);
				out.push_back(std::move(q));
			}
			std::size_t j = 0;
			while (j < m && c[j] == radius) c[j++] = -radius;
			if (j == m) break;
			++c[j];
		}
	}

	std::mt19937_64 rng(config.seed);
	std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
	while (out.size() < total) {
		std::vector<Rational> q;
		for (std::size_t j = 0; j < m; ++j) {
			Rational v(num(rng), den(rng));
			v.canonicalize();
			q.push_back(v);
		}
		out.push_back(std::move(q));
	}
	return out;
}

/// Best rank over the Lee-form sweep. The lower bound is certified at the
/// reported theta; the upper bound is the theta-independent cap.
inline RankReport hlck_rank(const AlgebraInstance& inst, const HlckSweepConfig& config = {}) {
	auto report = detail::make_report(RankKind::hlck, inst);
	TwistedSystem sys(inst);

	auto cap = facial_reduction(sys.theta_independent_slice());
	SweepSummary summary;
	summary.cap = static_cast<int>(cap.surviving.size());
	summary.cap_steps = cap.steps;

	auto extra = config.explicit_thetas;
	for (auto& t : special_thetas(inst)) extra.push_back(t);
	auto candidates = theta_candidates(sys, extra, config);

	std::optional<ConeRankCertificate> best;
	for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
		auto fr = facial_reduction(sys.slice(candidates[idx]));
		int up = static_cast<int>(fr.surviving.size());
		summary.max_upper = std::max(summary.max_upper, up);
		++summary.evaluated;
		if (!best || up > best->lower) {
			auto cert = max_rank_over_cone(fr, config.search);
			if (!best || cert.lower > best->lower) {
				best = std::move(cert);
				summary.best_index = idx;
			}
		}
		if (config.stop_at_cap && best->lower >= summary.cap) break;
	}

	report.certificate = *best;
	report.theta = sys.complex_coefficients(candidates[summary.best_index]);
	report.lower = best->lower;
	report.upper = summary.cap;
	report.sweep = summary;
	return report;
}

inline RankReport compute_rank(RankKind kind, const AlgebraInstance& inst, const HlckSweepConfig& config = {}) {
	switch (kind) {
		case RankKind::kahler: return kahler_rank(inst, config.search);
		case RankKind::skt: return skt_rank(inst, config.search);
		case RankKind::hlck: return hlck_rank(inst, config);
	}
	throw std::logic_error("unreachable");
}

/// Re-derives the slice from the algebra and checks the report's certificate
/// and the closedness of its witness directly on forms.
inline std::vector<std::string> verify_report(const AlgebraInstance& inst, const RankReport& report) {
	std::optional<Form> theta;
	if (report.kind == RankKind::hlck) {
		if (!report.theta) return {"hlck report without a Lee form"};
		theta = real_one_form(inst.n, *report.theta);
		if (!inst.spec.d(*theta).is_zero()) return {"Lee form is not d-closed"};
	}
	auto slice = closedness_slice(report.kind, inst, theta);
	auto problems = verify_certificate(slice, report.certificate);

	Form omega = report.certificate.witness_matrix().to_form();
	Form image = report.kind == RankKind::kahler ? inst.spec.d(omega)
	             : report.kind == RankKind::skt  ? inst.spec.del_delbar(omega)
	                                             : inst.spec.twisted(*theta, omega);
	if (!image.is_zero()) problems.push_back("witness fails its closedness equation: " + to_string(image));
	if (report.lower != report.certificate.lower) problems.push_back("report lower bound differs from certificate");
	if (report.kind != RankKind::hlck && report.upper != report.certificate.upper)
		problems.push_back("report upper bound differs from certificate");
	if (report.lower > report.upper) problems.push_back("lower bound exceeds upper bound");
	if (report.lower == inst.n && !is_positive_definite(report.certificate.witness_matrix()))
		problems.push_back("full-rank witness is not positive definite");
	return problems;
}

}  // namespace shrank
