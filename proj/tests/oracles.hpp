#pragma once

#include "shrank/cone.hpp"
#include "shrank/hermitian.hpp"
#include "shrank/rank_engine.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {
using HP = boost::multiprecision::cpp_bin_float_50;
}

template <>
struct Eigen::NumTraits<oracle::HP> : Eigen::GenericNumTraits<oracle::HP> {
	using Real = oracle::HP;
	using NonInteger = oracle::HP;
	using Nested = oracle::HP;
	enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 20, AddCost = 30, MulCost = 50 };
	static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
	static Real dummy_precision() { return Real("1e-45"); }
	static Real highest() { return std::numeric_limits<Real>::max(); }
	static Real lowest() { return std::numeric_limits<Real>::lowest(); }
	static Real infinity() { return std::numeric_limits<Real>::infinity(); }
	static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
	static int digits10() { return std::numeric_limits<Real>::digits10; }
};

namespace oracle {

using namespace shrank;

/// Sign of the permutation sorting the concatenated index lists, by counting inversions.
inline int permutation_sign(const std::vector<int>& seq) {
	int inv = 0;
	for (std::size_t a = 0; a < seq.size(); ++a)
		for (std::size_t b = a + 1; b < seq.size(); ++b)
			if (seq[a] > seq[b]) ++inv;
	return inv % 2 ? -1 : 1;
}

/// Leibniz expansion over all permutations.
inline GaussianRational leibniz_determinant(const GaussianMatrix& m) {
	std::vector<int> p(m.rows());
	std::iota(p.begin(), p.end(), 0);
	GaussianRational det(0);
	do {
		GaussianRational t(permutation_sign(p));
		for (std::size_t r = 0; r < p.size(); ++r) t *= m(r, p[r]);
		det += t;
	} while (std::next_permutation(p.begin(), p.end()));
	return det;
}

inline HP to_hp(const Rational& q) { return HP(q.get_num().get_str()) / HP(q.get_den().get_str()); }

/// Eigenvalues of H through the real symmetric embedding [[A, -B], [B, A]],
/// which doubles every eigenvalue.
inline std::vector<HP> eigenvalues(const HermitianCoeffMatrix& h) {
	int n = h.dim();
	using M = Eigen::Matrix<HP, Eigen::Dynamic, Eigen::Dynamic>;
	M s(2 * n, 2 * n);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			HP re = to_hp(h(a, b).re), im = to_hp(h(a, b).im);
			s(a, b) = re;
			s(a + n, b + n) = re;
			s(a, b + n) = -im;
			s(a + n, b) = im;
		}
	Eigen::SelfAdjointEigenSolver<M> solver(s, Eigen::EigenvaluesOnly);
	std::vector<HP> out;
	for (int k = 0; k < 2 * n; ++k) out.push_back(solver.eigenvalues()(k));
	return out;
}

inline bool numeric_psd(const HermitianCoeffMatrix& h, const HP& tol) {
	for (auto& v : eigenvalues(h))
		if (v < -tol) return false;
	return true;
}

inline int numeric_rank(const HermitianCoeffMatrix& h, const HP& tol) {
	int r = 0;
	for (auto& v : eigenvalues(h))
		if (abs(v) > tol) ++r;
	return r / 2;
}

/// Random Hermitian matrix: half the time a sum of rank-one terms v v* (PSD of
/// chosen rank), otherwise independent small entries.
inline HermitianCoeffMatrix random_hermitian(std::mt19937_64& rng, int n) {
	std::uniform_int_distribution<long> small(-3, 3), coin(0, 1);
	GaussianMatrix h(n, n);
	if (coin(rng)) {
		int terms = std::uniform_int_distribution<int>(0, n)(rng);
		for (int t = 0; t < terms; ++t) {
			std::vector<GaussianRational> v;
			for (int k = 0; k < n; ++k) v.emplace_back(Rational(small(rng)), Rational(small(rng)));
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) h(a, b) += v[a] * v[b].conj();
		}
		if (coin(rng)) {
			int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
			h(a, a) -= GaussianRational(Rational(1, 1000));
		}
	} else {
		for (int a = 0; a < n; ++a) {
			h(a, a) = GaussianRational(Rational(small(rng)));
			for (int b = a + 1; b < n; ++b) {
				h(a, b) = GaussianRational(Rational(small(rng)), Rational(small(rng)));
				h(b, a) = h(a, b).conj();
			}
		}
	}
	return HermitianCoeffMatrix(h);
}

struct GridResult {
	std::size_t points = 0;
	std::size_t psd_points = 0;
	int max_rank = 0;
};

/// Exact PSD test and rank at every integer combination of the slice basis
/// with coefficients in [-R, R], R as large as the point budget allows.
inline GridResult grid_max_rank(const LinearSlice& slice, std::size_t budget = 20000) {
	GridResult out;
	std::size_t dim = slice.dim();
	if (dim == 0) {
		out.points = 1;
		out.psd_points = 1;
		return out;
	}
	long radius = 0;
	auto count = [&](long r) {
		double c = 1;
		for (std::size_t k = 0; k < dim; ++k) c *= double(2 * r + 1);
		return c;
	};
	while (count(radius + 1) <= double(budget)) ++radius;
	if (radius == 0) radius = 1;
	std::vector<long> c(dim, -radius);
	for (;;) {
		std::vector<Rational> y;
		for (auto v : c) y.emplace_back(v);
		auto x = slice.combine(y);
		++out.points;
		auto h = HermitianCoeffMatrix::from_real_coords(slice.n(), x);
		if (is_psd_exact(h)) {
			++out.psd_points;
			out.max_rank = std::max(out.max_rank, static_cast<int>(rank_exact(h)));
		}
		std::size_t k = 0;
		while (k < dim && c[k] == radius) c[k++] = -radius;
		if (k == dim) break;
		++c[k];
		if (out.points >= budget * 3) break;
	}
	return out;
}

}  // namespace oracle
