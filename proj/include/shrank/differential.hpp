#pragma once

#include "shrank/form.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace shrank {

/// The differential of an invariant complex structure, given by d(phi^i).
/// d(phibar^i) is obtained by conjugation; d is extended to the whole exterior
/// algebra as the degree +1 graded derivation killing constants.
class DifferentialSpec {
public:
	explicit DifferentialSpec(std::vector<Form> holomorphic_images) {
		if (holomorphic_images.empty()) throw std::invalid_argument("empty differential spec");
		n_ = holomorphic_images.front().dim();
		images_.reserve(2 * n_);
		for (std::size_t i = 0; i < holomorphic_images.size(); ++i) {
			const Form& f = holomorphic_images[i];
			if (f.dim() != n_) throw std::invalid_argument("generator images of mixed dimension");
			if (!f.is_zero() && f.degree() != 2)
				throw std::invalid_argument("d(phi^" + std::to_string(i + 1) + ") is not a 2-form");
			if (!f.bidegree_part(0, 2).is_zero())
				throw std::invalid_argument("d(phi^" + std::to_string(i + 1) +
				                            ") has a (0,2) component: complex structure not integrable");
			images_.push_back(f);
		}
		if (static_cast<int>(images_.size()) != n_)
			throw std::invalid_argument("need one image per generator");
		for (int i = 0; i < n_; ++i) images_.push_back(images_[i].conj());

		if (n_ <= 4) {
			table_.reserve(std::size_t(1) << (2 * n_));
			for (BasisMask m = 0; m < (BasisMask(1) << (2 * n_)); ++m) table_.push_back(d_basis_uncached(m));
		}
	}

	/// Abelian structure: every generator closed.
	static DifferentialSpec abelian(int n) { return DifferentialSpec(std::vector<Form>(n, Form(n))); }

	int dim() const { return n_; }
	/// Image of generator g (0-based over phi^1..phi^n, phibar^1..phibar^n).
	const Form& generator_image(int g) const { return images_.at(g); }

	Form d_basis(BasisMask m) const { return table_.empty() ? d_basis_uncached(m) : table_.at(m); }

	Form d(const Form& a) const {
		check(a);
		Form out(n_);
		for (auto& [m, c] : a.terms()) {
			Form scratch(n_);
			const Form& dm = basis_image(m, scratch);
			for (auto& [k, e] : dm.terms()) out.add_term(k, c * e);
		}
		return out;
	}

	/// (p+1, q) part of d on each (p, q) term.
	Form del(const Form& a) const { return projected(a, 1, 0); }
	/// (p, q+1) part of d on each (p, q) term.
	Form delbar(const Form& a) const { return projected(a, 0, 1); }
	Form del_delbar(const Form& a) const { return del(delbar(a)); }

	/// d_theta(a) = d a - theta ^ a.
	Form twisted(const Form& theta, const Form& a) const {
		if (!theta.is_zero() && theta.degree() != 1) throw std::invalid_argument("twisting form must have degree 1");
		return d(a) - wedge(theta, a);
	}

	/// Coefficients of d(d(g)) for all generators; empty iff d^2 = 0.
	std::vector<std::string> jacobi_defects() const {
		std::vector<std::string> out;
		for (int g = 0; g < 2 * n_; ++g) {
			Form dd = d(images_[g]);
			for (auto& [m, c] : dd.terms()) {
				std::string name = g < n_ ? "phi^" + std::to_string(g + 1) : "phibar^" + std::to_string(g - n_ + 1);
				out.push_back("d(d " + name + ") has coefficient " + to_string(c) + " on phi^{" + dd.label(m) + "}");
			}
		}
		return out;
	}

private:
	void check(const Form& a) const {
		if (a.dim() != n_) throw std::invalid_argument("form dimension does not match differential");
	}

	const Form& basis_image(BasisMask m, Form& scratch) const {
		if (!table_.empty()) return table_[m];
		scratch = d_basis_uncached(m);
		return scratch;
	}

	Form d_basis_uncached(BasisMask m) const {
		Form out(n_);
		int position = 0;
		for (BasisMask rest = m; rest; rest &= rest - 1, ++position) {
			int g = std::countr_zero(rest);
			BasisMask bit = BasisMask(1) << g;
			BasisMask before = m & (bit - 1);
			BasisMask after = m & ~((bit << 1) - 1);
			int sign = (position % 2) ? -1 : 1;
			for (auto& [k, c] : images_[g].terms()) {
				if ((k & before) || (k & after)) continue;
				int s = sign * merge_sign(before, k) * merge_sign(before | k, after);
				out.add_term(before | k | after, s < 0 ? -c : c);
			}
		}
		return out;
	}

	Form projected(const Form& a, int dp, int dq) const {
		check(a);
		Form out(n_);
		for (auto& [m, c] : a.terms()) {
			auto [p, q] = a.bidegree(m);
			Form scratch(n_);
			const Form& dm = basis_image(m, scratch);
			for (auto& [k, e] : dm.terms())
				if (out.bidegree(k) == std::pair{p + dp, q + dq}) out.add_term(k, c * e);
		}
		return out;
	}

	int n_ = 0;
	std::vector<Form> images_;
	std::vector<Form> table_;
};

}  // namespace shrank
