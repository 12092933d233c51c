#pragma once

#include "shrank/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shrank {

/// Basis monomial of the exterior algebra on phi^1..phi^n, phibar^1..phibar^n.
/// Bit g < n is phi^{g+1}; bit n + g is phibar^{g+1}. Factors are always in
/// ascending bit order, so holomorphic factors precede antiholomorphic ones.
using BasisMask = std::uint32_t;

inline int mask_degree(BasisMask m) { return std::popcount(m); }

/// Lexicographic order on the ascending index list of a mask (a proper prefix is smaller).
inline bool mask_lex_less(BasisMask a, BasisMask b) {
	if (a == b) return false;
	BasisMask diff = a ^ b;
	int k = std::countr_zero(diff);
	BasisMask above = ~((BasisMask(2) << k) - 1);
	if (a & (BasisMask(1) << k)) return (b & above) != 0;
	return (a & above) == 0;
}

struct BasisOrder {
	bool operator()(BasisMask a, BasisMask b) const {
		int da = mask_degree(a), db = mask_degree(b);
		if (da != db) return da < db;
		return mask_lex_less(a, b);
	}
};

/// Sign of reordering (factors of a) followed by (factors of b) into ascending order.
inline int merge_sign(BasisMask a, BasisMask b) {
	int inversions = 0;
	while (b) {
		int k = std::countr_zero(b);
		inversions += std::popcount(a >> (k + 1));
		b &= b - 1;
	}
	return (inversions & 1) ? -1 : 1;
}

/// Invariant complex form with polynomial coefficients on the canonical basis.
class Form {
public:
	using Terms = std::map<BasisMask, Polynomial, BasisOrder>;

	explicit Form(int n) : n_(n) {
		if (n < 1 || n > 15) throw std::invalid_argument("form dimension out of range");
	}

	static Form scalar(int n, Polynomial c) {
		Form f(n);
		f.add_term(0, std::move(c));
		return f;
	}
	/// phi^j (1-based).
	static Form phi(int n, int j) { return basis(n, {j}, {}); }
	/// phibar^j (1-based).
	static Form phibar(int n, int j) { return basis(n, {}, {j}); }
	/// c * phi^{I} ^ phibar^{J}; I and J list 1-based indices in any order, with sign.
	static Form basis(int n, const std::vector<int>& hol, const std::vector<int>& anti, Polynomial c = Polynomial(1)) {
		Form f = scalar(n, std::move(c));
		for (int j : hol) f = wedge_generator(f, j - 1);
		for (int j : anti) f = wedge_generator(f, n + j - 1);
		return f;
	}

	int dim() const { return n_; }
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	BasisMask hol_part(BasisMask m) const { return m & ((BasisMask(1) << n_) - 1); }
	BasisMask anti_part(BasisMask m) const { return m >> n_; }
	std::pair<int, int> bidegree(BasisMask m) const { return {mask_degree(hol_part(m)), mask_degree(anti_part(m))}; }

	/// Key for phi^{I} ^ phibar^{J} with strictly increasing 1-based I, J.
	BasisMask key(const std::vector<int>& hol, const std::vector<int>& anti) const {
		BasisMask m = 0;
		for (int j : hol) m |= BasisMask(1) << (j - 1);
		for (int j : anti) m |= BasisMask(1) << (n_ + j - 1);
		return m;
	}

	Polynomial coefficient(BasisMask m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? Polynomial() : it->second;
	}
	Polynomial coefficient(const std::vector<int>& hol, const std::vector<int>& anti) const {
		return coefficient(key(hol, anti));
	}

	void add_term(BasisMask m, const Polynomial& c) {
		if (c.is_zero()) return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero()) terms_.erase(it);
		}
	}

	/// Degree if all terms share one degree; -1 for zero or mixed forms.
	int degree() const {
		if (terms_.empty()) return -1;
		int d = mask_degree(terms_.begin()->first);
		for (auto& [m, c] : terms_)
			if (mask_degree(m) != d) return -1;
		return d;
	}

	Form bidegree_part(int p, int q) const {
		Form out(n_);
		for (auto& [m, c] : terms_)
			if (bidegree(m) == std::pair{p, q}) out.terms_.emplace_hint(out.terms_.end(), m, c);
		return out;
	}

	Form degree_part(int d) const {
		Form out(n_);
		for (auto& [m, c] : terms_)
			if (mask_degree(m) == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
		return out;
	}

	/// conj(c phi^I ^ phibar^J) = conj(c) (-1)^{|I||J|} phi^J ^ phibar^I.
	Form conj() const {
		Form out(n_);
		for (auto& [m, c] : terms_) {
			BasisMask h = hol_part(m), a = anti_part(m);
			int sign = (mask_degree(h) * mask_degree(a)) % 2 ? -1 : 1;
			Polynomial cc = c.conj();
			out.add_term(a | (h << n_), sign < 0 ? -cc : cc);
		}
		return out;
	}

	template <class Fn>
	Form map_coefficients(Fn&& fn) const {
		Form out(n_);
		for (auto& [m, c] : terms_) out.add_term(m, fn(c));
		return out;
	}

	Form operator-() const {
		return map_coefficients([](const Polynomial& c) { return -c; });
	}
	Form& operator+=(const Form& o) {
		check_dim(o);
		for (auto& [m, c] : o.terms_) add_term(m, c);
		return *this;
	}
	Form& operator-=(const Form& o) {
		check_dim(o);
		for (auto& [m, c] : o.terms_) add_term(m, -c);
		return *this;
	}
	friend Form operator+(Form a, const Form& b) { return a += b; }
	friend Form operator-(Form a, const Form& b) { return a -= b; }
	friend Form operator*(const Polynomial& s, const Form& f) {
		return f.map_coefficients([&](const Polynomial& c) { return s * c; });
	}
	friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
	friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

	friend Form wedge(const Form& a, const Form& b) {
		a.check_dim(b);
		Form out(a.n_);
		for (auto& [ma, ca] : a.terms_)
			for (auto& [mb, cb] : b.terms_) {
				if (ma & mb) continue;
				Polynomial c = ca * cb;
				out.add_term(ma | mb, merge_sign(ma, mb) < 0 ? -c : c);
			}
		return out;
	}

	/// "12|3" for phi^1 ^ phi^2 ^ phibar^3; "1" for the unit.
	std::string label(BasisMask m) const {
		if (m == 0) return "1";
		std::string s;
		for (int j = 0; j < n_; ++j)
			if (m & (BasisMask(1) << j)) s += std::to_string(j + 1);
		s += '|';
		for (int j = 0; j < n_; ++j)
			if (m & (BasisMask(1) << (n_ + j))) s += std::to_string(j + 1);
		return s;
	}

private:
	void check_dim(const Form& o) const {
		if (o.n_ != n_) throw std::invalid_argument("forms of different dimension");
	}
	static Form wedge_generator(const Form& f, int g) {
		Form out(f.n_);
		BasisMask bit = BasisMask(1) << g;
		for (auto& [m, c] : f.terms_) {
			if (m & bit) continue;
			out.add_term(m | bit, merge_sign(m, bit) < 0 ? -c : c);
		}
		return out;
	}

	int n_;
	Terms terms_;
};

/// k-fold wedge power; power(a, 0) is the unit.
inline Form power(const Form& a, unsigned k) {
	Form out = Form::scalar(a.dim(), Polynomial(1));
	for (unsigned j = 0; j < k; ++j) out = wedge(out, a);
	return out;
}

inline Form substitute(const Form& f, const std::map<Indeterminate, Binding>& bindings) {
	return f.map_coefficients([&](const Polynomial& c) { return substitute(c, bindings); });
}

inline std::string to_string(const Form& f) {
	if (f.is_zero()) return "0";
	std::string out;
	for (auto& [m, c] : f.terms()) {
		if (!out.empty()) out += " + ";
		out += "(" + to_string(c) + ") phi^{" + f.label(m) + "}";
	}
	return out;
}

}  // namespace shrank
