#pragma once

#include "shrank/form.hpp"
#include "shrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace shrank {

/// Index of Re H_jk (Im H_jk is the next slot) for j < k in the real
/// coordinate layout: n diagonal entries first, then pairs in lexicographic order.
inline std::size_t offdiag_coord(int n, int j, int k) {
	std::size_t idx = n;
	for (int a = 0; a < n; ++a)
		for (int b = a + 1; b < n; ++b) {
			if (a == j && b == k) return idx;
			idx += 2;
		}
	throw std::out_of_range("offdiag_coord requires j < k < n");
}

/// Hermitian n x n matrix H with omega = i sum_{j,k} H_jk phi^j ^ phibar^k.
/// For the generic metric: H_11 = r2, H_22 = s2, H_33 = t2, H_12 = -i u,
/// H_23 = -i v, H_13 = -i z.
class HermitianCoeffMatrix {
public:
	explicit HermitianCoeffMatrix(GaussianMatrix h) : h_(std::move(h)) {
		if (h_.rows() != h_.cols()) throw std::invalid_argument("Hermitian matrix must be square");
		for (std::size_t j = 0; j < h_.rows(); ++j)
			for (std::size_t k = j; k < h_.cols(); ++k)
				if (h_(j, k) != h_(k, j).conj()) throw std::invalid_argument("matrix is not Hermitian");
	}

	static std::size_t real_dim(int n) { return static_cast<std::size_t>(n) * n; }

	static HermitianCoeffMatrix from_real_coords(int n, const std::vector<Rational>& x) {
		if (x.size() != real_dim(n)) throw std::invalid_argument("wrong number of real coordinates");
		GaussianMatrix h(n, n);
		for (int j = 0; j < n; ++j) h(j, j) = GaussianRational(x[j]);
		for (int j = 0; j < n; ++j)
			for (int k = j + 1; k < n; ++k) {
				auto idx = offdiag_coord(n, j, k);
				h(j, k) = GaussianRational(x[idx], x[idx + 1]);
				h(k, j) = h(j, k).conj();
			}
		return HermitianCoeffMatrix(std::move(h));
	}

	/// Reads H from a numeric (1,1)-form; throws if the form is not real (1,1).
	static HermitianCoeffMatrix from_form(const Form& omega) {
		int n = omega.dim();
		GaussianMatrix h(n, n);
		for (auto& [m, c] : omega.terms()) {
			if (omega.bidegree(m) != std::pair{1, 1}) throw std::invalid_argument("form is not of type (1,1)");
			auto v = c.constant_value();
			if (!v) throw std::invalid_argument("form has symbolic coefficients");
			int j = std::countr_zero(omega.hol_part(m)), k = std::countr_zero(omega.anti_part(m));
			h(j, k) = *v * GaussianRational(Rational(0), Rational(-1));  // divide by i
		}
		return HermitianCoeffMatrix(std::move(h));
	}

	int dim() const { return static_cast<int>(h_.rows()); }
	const GaussianMatrix& matrix() const { return h_; }
	const GaussianRational& operator()(int j, int k) const { return h_(j, k); }

	std::vector<Rational> real_coords() const {
		int n = dim();
		std::vector<Rational> x(real_dim(n));
		for (int j = 0; j < n; ++j) x[j] = h_(j, j).re;
		for (int j = 0; j < n; ++j)
			for (int k = j + 1; k < n; ++k) {
				auto idx = offdiag_coord(n, j, k);
				x[idx] = h_(j, k).re;
				x[idx + 1] = h_(j, k).im;
			}
		return x;
	}

	Form to_form() const {
		int n = dim();
		Form f(n);
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				if (!h_(j, k).is_zero())
					f += Form::basis(n, {j + 1}, {k + 1}, Polynomial(GaussianRational::i() * h_(j, k)));
		return f;
	}

	friend bool operator==(const HermitianCoeffMatrix& a, const HermitianCoeffMatrix& b) { return a.h_ == b.h_; }

private:
	GaussianMatrix h_;
};

struct PrincipalMinor {
	std::vector<int> rows;  // 0-based index set
	Rational value;
};

/// All 2^n - 1 principal minors, ordered by size, then lexicographically.
inline std::vector<PrincipalMinor> principal_minors(const GaussianMatrix& h) {
	if (h.rows() != h.cols()) throw std::invalid_argument("principal minors need a square matrix");
	for (std::size_t j = 0; j < h.rows(); ++j)
		for (std::size_t k = j; k < h.cols(); ++k)
			if (h(j, k) != h(k, j).conj()) throw std::invalid_argument("matrix is not Hermitian");
	int n = static_cast<int>(h.rows());
	std::vector<std::vector<int>> subsets;
	for (unsigned m = 1; m < (1U << n); ++m) {
		std::vector<int> s;
		for (int b = 0; b < n; ++b)
			if (m & (1U << b)) s.push_back(b);
		subsets.push_back(std::move(s));
	}
	std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
		if (a.size() != b.size()) return a.size() < b.size();
		return a < b;
	});
	std::vector<PrincipalMinor> out;
	for (auto& s : subsets) {
		GaussianMatrix sub(s.size(), s.size());
		for (std::size_t a = 0; a < s.size(); ++a)
			for (std::size_t b = 0; b < s.size(); ++b) sub(a, b) = h(s[a], s[b]);
		GaussianRational det = sub.determinant();
		if (!det.is_real()) throw std::logic_error("principal minor of a Hermitian matrix is not real");
		out.push_back({s, det.re});
	}
	return out;
}

inline std::vector<PrincipalMinor> principal_minors(const HermitianCoeffMatrix& h) { return principal_minors(h.matrix()); }

/// Hermitian H is PSD iff every principal minor is >= 0.
inline bool is_psd_exact(const HermitianCoeffMatrix& h) {
	for (auto& m : principal_minors(h))
		if (sgn(m.value) < 0) return false;
	return true;
}

inline std::size_t rank_exact(const HermitianCoeffMatrix& h) { return h.matrix().rank(); }

/// Positive definite: all leading principal minors > 0.
inline bool is_positive_definite(const HermitianCoeffMatrix& h) {
	int n = h.dim();
	for (int k = 1; k <= n; ++k) {
		GaussianMatrix sub(k, k);
		for (int a = 0; a < k; ++a)
			for (int b = 0; b < k; ++b) sub(a, b) = h(a, b);
		if (sgn(sub.determinant().re) <= 0) return false;
	}
	return true;
}

}  // namespace shrank
