#pragma once

#include "shrank/hermitian.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace shrank {

using RealVector = std::vector<Rational>;

inline Rational dot(const RealVector& a, const RealVector& b) {
	Rational s = 0;
	for (std::size_t k = 0; k < a.size(); ++k)
		if (sgn(a[k]) != 0 && sgn(b[k]) != 0) s += a[k] * b[k];
	return s;
}

/// Real linear subspace of Hermitian n x n matrices, in the real coordinates of
/// HermitianCoeffMatrix. The basis is kept linearly independent.
class LinearSlice {
public:
	explicit LinearSlice(int n) : n_(n) {}

	static LinearSlice full(int n) {
		LinearSlice s(n);
		std::size_t N = HermitianCoeffMatrix::real_dim(n);
		for (std::size_t k = 0; k < N; ++k) {
			RealVector e(N, Rational(0));
			e[k] = 1;
			s.basis_.push_back(std::move(e));
		}
		return s;
	}

	/// Span of the given vectors (dependent ones are dropped).
	static LinearSlice span(int n, const std::vector<RealVector>& vectors) {
		LinearSlice s(n);
		std::size_t N = HermitianCoeffMatrix::real_dim(n);
		if (vectors.empty()) return s;
		RationalMatrix m = RationalMatrix::from_rows(vectors, N);
		auto pivots = m.rref();
		for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
		return s;
	}

	/// {x : e . x = 0 for every equation e}.
	static LinearSlice kernel(int n, const std::vector<RealVector>& equations) { return full(n).intersect(equations); }

	int n() const { return n_; }
	std::size_t dim() const { return basis_.size(); }
	const std::vector<RealVector>& basis() const { return basis_; }

	RealVector combine(const std::vector<Rational>& y) const {
		RealVector x(HermitianCoeffMatrix::real_dim(n_), Rational(0));
		for (std::size_t k = 0; k < basis_.size(); ++k) {
			if (sgn(y[k]) == 0) continue;
			for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[k] * basis_[k][c];
		}
		return x;
	}

	bool contains(const RealVector& x) const {
		if (x.size() != HermitianCoeffMatrix::real_dim(n_)) return false;
		bool zero = std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
		if (zero) return true;
		if (basis_.empty()) return false;
		std::vector<RealVector> rows = basis_;
		rows.push_back(x);
		return RationalMatrix::from_rows(rows, x.size()).rank() == basis_.size();
	}

	LinearSlice intersect(const std::vector<RealVector>& equations) const {
		if (equations.empty() || basis_.empty()) return *this;
		RationalMatrix e(equations.size(), basis_.size());
		for (std::size_t r = 0; r < equations.size(); ++r)
			for (std::size_t k = 0; k < basis_.size(); ++k) e(r, k) = dot(equations[r], basis_[k]);
		std::vector<RealVector> vectors;
		for (auto& y : e.nullspace()) vectors.push_back(combine(y));
		return span(n_, vectors);
	}

	/// Intersection with {H : row and column j of H vanish} for every j listed.
	LinearSlice zero_rows(const std::vector<int>& rows) const {
		std::size_t N = HermitianCoeffMatrix::real_dim(n_);
		std::vector<RealVector> eqs;
		auto unit = [&](std::size_t k) {
			RealVector e(N, Rational(0));
			e[k] = 1;
			eqs.push_back(std::move(e));
		};
		for (int j : rows) {
			unit(j);
			for (int k = 0; k < n_; ++k) {
				if (k == j) continue;
				auto idx = offdiag_coord(n_, std::min(j, k), std::max(j, k));
				unit(idx);
				unit(idx + 1);
			}
		}
		return intersect(eqs);
	}

private:
	int n_;
	std::vector<RealVector> basis_;
};

/// A positive combination of diagonal entries that vanishes on the slice,
/// which forces those rows and columns to zero on the PSD part of the slice.
struct ForcedZeroStep {
	std::vector<int> indices;  // 0-based
	std::vector<Rational> weights;

	std::string describe() const {
		std::string s;
		for (std::size_t k = 0; k < indices.size(); ++k) {
			if (k) s += " + ";
			if (weights[k] != 1) s += weights[k].get_str() + "*";
			s += "H" + std::to_string(indices[k] + 1) + std::to_string(indices[k] + 1);
		}
		return s + " = 0";
	}
};

/// Checks that step applies to slice: positive weights and the combination
/// vanishes on every basis vector.
inline bool step_holds(const LinearSlice& slice, const ForcedZeroStep& step) {
	if (step.indices.empty() || step.indices.size() != step.weights.size()) return false;
	for (std::size_t k = 0; k < step.indices.size(); ++k) {
		if (sgn(step.weights[k]) <= 0) return false;
		if (step.indices[k] < 0 || step.indices[k] >= slice.n()) return false;
	}
	for (auto& b : slice.basis()) {
		Rational s = 0;
		for (std::size_t k = 0; k < step.indices.size(); ++k) s += step.weights[k] * b[step.indices[k]];
		if (sgn(s) != 0) return false;
	}
	return true;
}

struct FacialReduction {
	LinearSlice face;
	std::vector<int> surviving;
	std::vector<ForcedZeroStep> steps;
};

/// Repeatedly finds diagonal combinations forced to vanish and cuts the slice
/// down to the face they leave. A minimal positive combination has a
/// one-dimensional kernel on its support, so support enumeration is complete.
inline FacialReduction facial_reduction(const LinearSlice& slice) {
	int n = slice.n();
	FacialReduction out{slice, {}, {}};
	for (int j = 0; j < n; ++j) out.surviving.push_back(j);

	for (bool progress = true; progress && !out.surviving.empty();) {
		progress = false;
		auto& S = out.surviving;
		std::size_t count = S.size();
		for (std::size_t size = 1; size <= count && !progress; ++size) {
			for (unsigned mask = 1; mask < (1U << count) && !progress; ++mask) {
				if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
				std::vector<int> T;
				for (std::size_t b = 0; b < count; ++b)
					if (mask & (1U << b)) T.push_back(S[b]);
				ForcedZeroStep step{T, {}};
				if (out.face.dim() == 0) {
					step.weights.assign(T.size(), Rational(1));
				} else {
					RationalMatrix m(out.face.dim(), T.size());
					for (std::size_t r = 0; r < out.face.dim(); ++r)
						for (std::size_t c = 0; c < T.size(); ++c) m(r, c) = out.face.basis()[r][T[c]];
					auto null = m.nullspace();
					if (null.size() != 1) continue;
					auto w = null.front();
					int s = sgn(w.front());
					if (!std::all_of(w.begin(), w.end(), [&](const Rational& q) { return sgn(q) == s; })) continue;
					if (s < 0)
						for (auto& q : w) q = -q;
					step.weights = w;
				}
				out.face = out.face.zero_rows(T);
				std::vector<int> rest;
				for (int j : S)
					if (std::find(T.begin(), T.end(), j) == T.end()) rest.push_back(j);
				S = rest;
				out.steps.push_back(std::move(step));
				progress = true;
			}
		}
	}
	return out;
}

struct SearchConfig {
	std::uint64_t seed = 42;
	int samples = 200;
	int coeff_bound = 3;
};

/// Rank bracket for max{rank H : H in slice, H >= 0} with an exact witness.
struct ConeRankCertificate {
	int n = 0;
	int lower = 0;
	int upper = 0;
	RealVector witness;  // real coordinates of a PSD element of rank `lower`
	std::vector<ForcedZeroStep> steps;

	bool exact() const { return lower == upper; }
	HermitianCoeffMatrix witness_matrix() const { return HermitianCoeffMatrix::from_real_coords(n, witness); }
};

namespace detail {

/// Positive rescaling to a primitive integer vector.
inline RealVector primitive(RealVector x) {
	mpz_class l = 1, g = 0;
	for (auto& q : x)
		if (sgn(q) != 0) l = lcm(l, q.get_den());
	for (auto& q : x) {
		q *= l;
		q.canonicalize();
		if (sgn(q) != 0) g = gcd(g, q.get_num());
	}
	if (g > 1)
		for (auto& q : x) {
			q /= g;
			q.canonicalize();
		}
	return x;
}

/// Cheap floating-point screen: false only when some principal minor is
/// clearly negative. Survivors still go through the exact test.
inline bool maybe_psd(int n, const RealVector& x) {
	std::vector<std::complex<double>> h(n * n);
	double scale = 0;
	for (int j = 0; j < n; ++j) {
		h[j * n + j] = x[j].get_d();
		scale = std::max(scale, std::abs(x[j].get_d()));
	}
	for (int j = 0; j < n; ++j)
		for (int k = j + 1; k < n; ++k) {
			auto idx = offdiag_coord(n, j, k);
			h[j * n + k] = {x[idx].get_d(), x[idx + 1].get_d()};
			h[k * n + j] = std::conj(h[j * n + k]);
			scale = std::max(scale, std::abs(h[j * n + k]));
		}
	if (scale == 0) return true;
	for (unsigned m = 1; m < (1U << n); ++m) {
		std::vector<int> s;
		for (int b = 0; b < n; ++b)
			if (m & (1U << b)) s.push_back(b);
		std::size_t k = s.size();
		std::vector<std::complex<double>> a(k * k);
		for (std::size_t r = 0; r < k; ++r)
			for (std::size_t c = 0; c < k; ++c) a[r * k + c] = h[s[r] * n + s[c]] / scale;
		std::complex<double> det = 1;
		for (std::size_t c = 0; c < k; ++c) {
			std::size_t p = c;
			for (std::size_t r = c + 1; r < k; ++r)
				if (std::abs(a[r * k + c]) > std::abs(a[p * k + c])) p = r;
			if (std::abs(a[p * k + c]) == 0) {
				det = 0;
				break;
			}
			if (p != c) {
				for (std::size_t q = 0; q < k; ++q) std::swap(a[p * k + q], a[c * k + q]);
				det = -det;
			}
			det *= a[c * k + c];
			for (std::size_t r = c + 1; r < k; ++r) {
				auto f = a[r * k + c] / a[c * k + c];
				for (std::size_t q = c; q < k; ++q) a[r * k + q] -= f * a[c * k + q];
			}
		}
		if (det.real() < -1e-9) return false;
	}
	return true;
}

/// Orthogonal projection of target onto the span of the face basis.
inline RealVector project(const LinearSlice& face, const RealVector& target) {
	std::size_t m = face.dim();
	RationalMatrix g(m, m);
	std::vector<Rational> rhs(m);
	for (std::size_t a = 0; a < m; ++a) {
		rhs[a] = dot(face.basis()[a], target);
		for (std::size_t b = 0; b < m; ++b) g(a, b) = dot(face.basis()[a], face.basis()[b]);
	}
	return face.combine(solve(g, rhs));
}

}  // namespace detail

/// Facial reduction gives the upper bound; exact PSD candidates on the reduced
/// face give the lower bound. Deterministic for a fixed config.
inline ConeRankCertificate max_rank_over_cone(const FacialReduction& fr, const SearchConfig& config = {}) {
	int n = fr.face.n();
	std::size_t N = HermitianCoeffMatrix::real_dim(n);
	ConeRankCertificate cert;
	cert.n = n;
	cert.upper = static_cast<int>(fr.surviving.size());
	cert.steps = fr.steps;
	cert.witness.assign(N, Rational(0));
	const LinearSlice& face = fr.face;
	if (face.dim() == 0 || cert.upper == 0) return cert;

	RealVector psd_sum(N, Rational(0));
	bool done = false;
	auto consider = [&](RealVector x) {
		if (done) return;
		if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; })) return;
		if (!detail::maybe_psd(n, x)) return;
		auto h = HermitianCoeffMatrix::from_real_coords(n, x);
		if (!is_psd_exact(h)) return;
		for (std::size_t k = 0; k < N; ++k) psd_sum[k] += x[k];
		int r = static_cast<int>(rank_exact(h));
		if (r > cert.lower) {
			cert.lower = r;
			cert.witness = detail::primitive(std::move(x));
		}
		if (cert.lower == cert.upper) done = true;
	};

	RealVector target(N, Rational(0));
	for (int j : fr.surviving) target[j] = 1;
	consider(detail::project(face, target));

	for (auto& b : face.basis()) {
		consider(b);
		RealVector neg = b;
		for (auto& q : neg) q = -q;
		consider(neg);
	}

	// on a line every PSD element is a positive multiple of +b or -b
	if (face.dim() == 1) return cert;

	std::mt19937_64 rng(config.seed);
	std::uniform_int_distribution<int> coeff(-config.coeff_bound, config.coeff_bound);
	for (int s = 0; s < config.samples && !done; ++s) {
		std::vector<Rational> y(face.dim());
		for (auto& q : y) q = coeff(rng);
		consider(face.combine(y));
	}
	consider(psd_sum);
	return cert;
}

inline ConeRankCertificate max_rank_over_cone(const LinearSlice& slice, const SearchConfig& config = {}) {
	return max_rank_over_cone(facial_reduction(slice), config);
}

/// Independent replay of a certificate against the original slice. Returns the
/// list of failures; empty means the certificate holds.
inline std::vector<std::string> verify_certificate(const LinearSlice& slice, const ConeRankCertificate& cert) {
	std::vector<std::string> problems;
	int n = slice.n();
	if (cert.n != n) return {"certificate dimension " + std::to_string(cert.n) + " differs from slice " + std::to_string(n)};
	if (cert.witness.size() != HermitianCoeffMatrix::real_dim(n)) return {"witness has the wrong number of coordinates"};

	if (!slice.contains(cert.witness)) problems.push_back("witness is not in the slice");
	auto h = cert.witness_matrix();
	if (!is_psd_exact(h)) problems.push_back("witness is not positive semidefinite");
	int r = static_cast<int>(rank_exact(h));
	if (r != cert.lower) problems.push_back("witness rank " + std::to_string(r) + " differs from claimed " + std::to_string(cert.lower));

	LinearSlice face = slice;
	std::vector<bool> alive(n, true);
	for (std::size_t k = 0; k < cert.steps.size(); ++k) {
		auto& step = cert.steps[k];
		if (!step_holds(face, step)) {
			problems.push_back("reduction step " + std::to_string(k + 1) + " (" + step.describe() + ") does not hold");
			break;
		}
		for (int j : step.indices) {
			if (!alive[j]) problems.push_back("reduction step " + std::to_string(k + 1) + " repeats index " + std::to_string(j + 1));
			alive[j] = false;
		}
		face = face.zero_rows(step.indices);
	}
	int survivors = static_cast<int>(std::count(alive.begin(), alive.end(), true));
	if (survivors != cert.upper)
		problems.push_back("reduction leaves " + std::to_string(survivors) + " rows, certificate claims " + std::to_string(cert.upper));
	if (cert.lower > cert.upper) problems.push_back("lower bound exceeds upper bound");
	return problems;
}

}  // namespace shrank
