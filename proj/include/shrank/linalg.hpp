#pragma once

#include "shrank/gaussian.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shrank {

inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero_value(const GaussianRational& q) { return q.is_zero(); }

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
template <class F>
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

	static Matrix identity(std::size_t n) {
		Matrix m(n, n);
		for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
		return m;
	}
	static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
		Matrix m(rows.size(), cols);
		for (std::size_t r = 0; r < rows.size(); ++r) {
			if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
			for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
		}
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::vector<F> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

	Matrix transpose() const {
		Matrix t(cols_, rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
		return t;
	}

	friend Matrix operator*(const Matrix& a, const Matrix& b) {
		if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
		Matrix out(a.rows_, b.cols_);
		for (std::size_t r = 0; r < a.rows_; ++r)
			for (std::size_t k = 0; k < a.cols_; ++k) {
				if (is_zero_value(a(r, k))) continue;
				for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
			}
		return out;
	}

	friend bool operator==(const Matrix& a, const Matrix& b) {
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

	/// Reduced row echelon form in place; returns pivot columns.
	std::vector<std::size_t> rref() {
		std::vector<std::size_t> pivots;
		std::size_t lead_row = 0;
		for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
			std::size_t p = lead_row;
			while (p < rows_ && is_zero_value((*this)(p, c))) ++p;
			if (p == rows_) continue;
			if (p != lead_row)
				for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(lead_row, k));
			F inv = F(1) / (*this)(lead_row, c);
			for (std::size_t k = c; k < cols_; ++k) (*this)(lead_row, k) *= inv;
			for (std::size_t r = 0; r < rows_; ++r) {
				if (r == lead_row || is_zero_value((*this)(r, c))) continue;
				F f = (*this)(r, c);
				for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) -= f * (*this)(lead_row, k);
			}
			pivots.push_back(c);
			++lead_row;
		}
		return pivots;
	}

	std::size_t rank() const {
		Matrix m = *this;
		return m.rref().size();
	}

	/// Basis of {x : A x = 0}, one vector per free column, with a 1 in that column.
	std::vector<std::vector<F>> nullspace() const {
		Matrix m = *this;
		auto pivots = m.rref();
		std::vector<bool> is_pivot(cols_, false);
		for (auto p : pivots) is_pivot[p] = true;
		std::vector<std::vector<F>> basis;
		for (std::size_t free = 0; free < cols_; ++free) {
			if (is_pivot[free]) continue;
			std::vector<F> v(cols_, F(0));
			v[free] = F(1);
			for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
			basis.push_back(std::move(v));
		}
		return basis;
	}

	F determinant() const {
		if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
		Matrix m = *this;
		F det(1);
		for (std::size_t c = 0; c < cols_; ++c) {
			std::size_t p = c;
			while (p < rows_ && is_zero_value(m(p, c))) ++p;
			if (p == rows_) return F(0);
			if (p != c) {
				for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(c, k));
				det = -det;
			}
			det *= m(c, c);
			F inv = F(1) / m(c, c);
			for (std::size_t r = c + 1; r < rows_; ++r) {
				if (is_zero_value(m(r, c))) continue;
				F f = m(r, c) * inv;
				for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
			}
		}
		return det;
	}

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<F> data_;
};

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;

/// Solves the square system G y = b exactly; throws if G is singular.
template <class F>
std::vector<F> solve(const Matrix<F>& g, const std::vector<F>& b) {
	std::size_t n = g.rows();
	if (n == 0) return {};
	Matrix<F> aug(n, n + 1);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t c = 0; c < n; ++c) aug(r, c) = g(r, c);
		aug(r, n) = b[r];
	}
	auto pivots = aug.rref();
	if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("singular system");
	std::vector<F> y(n);
	for (std::size_t r = 0; r < n; ++r) y[r] = aug(r, n);
	return y;
}

}  // namespace shrank
