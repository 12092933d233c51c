#pragma once

#include "shrank/gaussian.hpp"
#include "shrank/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace shrank {

/// Sorted (indeterminate id, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline std::uint32_t total_degree(const Monomial& m) {
	std::uint32_t d = 0;
	for (auto& [id, e] : m) d += e;
	return d;
}

/// Higher total degree first, then lexicographic on the id/exponent list.
struct MonomialOrder {
	bool operator()(const Monomial& a, const Monomial& b) const {
		auto da = total_degree(a), db = total_degree(b);
		if (da != db) return da > db;
		return a < b;
	}
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
	Monomial out;
	out.reserve(a.size() + b.size());
	std::size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
			out.push_back(a[i++]);
		else if (i == a.size() || b[j].first < a[i].first)
			out.push_back(b[j++]);
		else {
			out.emplace_back(a[i].first, a[i].second + b[j].second);
			++i;
			++j;
		}
	}
	return out;
}

/// Sparse multivariate polynomial over Q(i). Terms with zero coefficient are
/// never stored, so structural equality is mathematical equality.
class Polynomial {
public:
	using Terms = std::map<Monomial, GaussianRational, MonomialOrder>;

	Polynomial() = default;
	Polynomial(GaussianRational c) {  // NOLINT
		if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
	}
	Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT
	Polynomial(Rational c) : Polynomial(GaussianRational(std::move(c))) {}  // NOLINT
	Polynomial(Indeterminate x) { terms_.emplace(Monomial{{x.id, 1}}, GaussianRational(1)); }  // NOLINT

	static Polynomial i() { return Polynomial(GaussianRational::i()); }
	static Polynomial var(const std::string& name) { return Polynomial(sym(name)); }

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
	std::optional<GaussianRational> constant_value() const {
		if (terms_.empty()) return GaussianRational(0);
		if (is_constant()) return terms_.begin()->second;
		return std::nullopt;
	}
	std::uint32_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

	GaussianRational coefficient(const Monomial& m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? GaussianRational(0) : it->second;
	}

	void add_term(const Monomial& m, const GaussianRational& c) {
		if (c.is_zero()) return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero()) terms_.erase(it);
		}
	}

	Polynomial operator-() const {
		Polynomial out;
		for (auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
		return out;
	}
	Polynomial& operator+=(const Polynomial& o) {
		for (auto& [m, c] : o.terms_) add_term(m, c);
		return *this;
	}
	Polynomial& operator-=(const Polynomial& o) {
		for (auto& [m, c] : o.terms_) add_term(m, -c);
		return *this;
	}
	friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
	friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
		Polynomial out;
		for (auto& [ma, ca] : a.terms_)
			for (auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
		return out;
	}
	Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

	Polynomial pow(unsigned k) const {
		Polynomial out(1), base = *this;
		while (k) {
			if (k & 1U) out *= base;
			k >>= 1U;
			if (k) base *= base;
		}
		return out;
	}

	/// Conjugates scalars and swaps every indeterminate with its partner.
	Polynomial conj() const {
		auto& table = SymbolTable::global();
		Polynomial out;
		for (auto& [m, c] : terms_) {
			Monomial swapped;
			swapped.reserve(m.size());
			for (auto& [id, e] : m) swapped.emplace_back(table.partner({id}).id, e);
			std::sort(swapped.begin(), swapped.end());
			out.add_term(swapped, c.conj());
		}
		return out;
	}

	friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
	Terms terms_;
};

inline std::string to_string(const Polynomial& p) {
	if (p.is_zero()) return "0";
	auto& table = SymbolTable::global();
	std::string out;
	bool first = true;
	for (auto& [m, c] : p.terms()) {
		std::string mono;
		for (auto& [id, e] : m) {
			if (!mono.empty()) mono += '*';
			mono += table.info({id}).name;
			if (e > 1) mono += "^" + std::to_string(e);
		}
		std::string coeff;
		bool negative = false;
		if (m.empty()) {
			coeff = to_string(c);
		} else if (c == GaussianRational(1)) {
		} else if (c == GaussianRational(-1)) {
			negative = true;
		} else if (c.is_real() || sgn(c.re) == 0) {
			coeff = to_string(c) + "*";
		} else {
			coeff = "(" + to_string(c) + ")*";
		}
		std::string term = coeff + mono;
		if (negative) term = "-" + term;
		if (!first) {
			if (term.front() == '-')
				out += " - " + term.substr(1);
			else
				out += " + " + term;
		} else {
			out += term;
		}
		first = false;
	}
	return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

using Binding = std::variant<GaussianRational, Polynomial>;

/// Substitutes indeterminates. A binding for a complex indeterminate implies the
/// conjugate binding for its partner unless one is given, in which case it
/// must agree. Numeric bindings of real indeterminates must be real, and of
/// real-nonnegative indeterminates must be >= 0.
inline Polynomial substitute(const Polynomial& p, const std::map<Indeterminate, Binding>& bindings) {
	auto& table = SymbolTable::global();
	std::map<std::uint32_t, Polynomial> full;
	auto as_poly = [](const Binding& b) {
		return std::holds_alternative<Polynomial>(b) ? std::get<Polynomial>(b) : Polynomial(std::get<GaussianRational>(b));
	};
	for (auto& [x, b] : bindings) {
		auto info = table.info(x);
		if (auto* num = std::get_if<GaussianRational>(&b)) {
			if (info.reality != Reality::complex && !num->is_real())
				throw InputError("reality violation: '" + info.name + "' is real but bound to " + to_string(*num));
			if (info.reality == Reality::nonnegative && sgn(num->re) < 0)
				throw InputError("reality violation: '" + info.name + "' is nonnegative but bound to " + to_string(*num));
		}
		full[x.id] = as_poly(b);
	}
	for (auto& [x, b] : bindings) {
		auto info = table.info(x);
		if (info.reality != Reality::complex) continue;
		Polynomial expected = as_poly(b).conj();
		if (auto it = full.find(info.partner); it != full.end()) {
			if (it->second != expected)
				throw InputError("conjugation violation: bindings of '" + info.name + "' and '" +
				                 table.info({info.partner}).name + "' are not conjugate");
		} else {
			full[info.partner] = expected;
		}
	}

	Polynomial out;
	for (auto& [m, c] : p.terms()) {
		Polynomial term(c);
		Monomial rest;
		for (auto& [id, e] : m) {
			if (auto it = full.find(id); it != full.end())
				term *= it->second.pow(e);
			else
				rest.emplace_back(id, e);
		}
		Polynomial mono;
		mono.add_term(rest, GaussianRational(1));
		out += term * mono;
	}
	return out;
}

namespace detail {

class PolynomialParser {
public:
	explicit PolynomialParser(std::string_view text) : s_(text) {}

	Polynomial parse() {
		Polynomial p = expr();
		skip();
		if (pos_ != s_.size()) fail("unexpected character");
		return p;
	}

private:
	[[noreturn]] void fail(const std::string& what) const {
		throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
		                 std::string(s_) + "'");
	}
	void skip() {
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
	}
	bool eat(char ch) {
		skip();
		if (pos_ < s_.size() && s_[pos_] == ch) {
			++pos_;
			return true;
		}
		return false;
	}

	Polynomial expr() {
		Polynomial p = unary();
		for (;;) {
			if (eat('+'))
				p += unary();
			else if (eat('-'))
				p -= unary();
			else
				return p;
		}
	}
	Polynomial unary() {
		if (eat('-')) return -unary();
		if (eat('+')) return unary();
		return term();
	}
	Polynomial term() {
		Polynomial p = power();
		for (;;) {
			if (eat('*')) {
				p *= power();
			} else if (eat('/')) {
				skip();
				std::size_t start = pos_;
				while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
				if (start == pos_) fail("expected integer divisor");
				Rational d(mpz_class(std::string(s_.substr(start, pos_ - start))));
				if (d == 0) fail("division by zero");
				p *= Polynomial(Rational(1 / d));
			} else {
				return p;
			}
		}
	}
	Polynomial power() {
		Polynomial base = primary();
		if (eat('^')) {
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
			if (start == pos_) fail("expected exponent");
			return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
		}
		return base;
	}
	Polynomial primary() {
		skip();
		if (pos_ >= s_.size()) fail("unexpected end");
		char ch = s_[pos_];
		if (ch == '(') {
			++pos_;
			Polynomial p = expr();
			if (!eat(')')) fail("expected ')'");
			return p;
		}
		if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
			std::size_t start = pos_;
			while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
			Rational v = parse_rational(s_.substr(start, pos_ - start));
			if (pos_ < s_.size() && s_[pos_] == 'i' &&
			    (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
				++pos_;
				return Polynomial(GaussianRational(Rational(0), v));
			}
			return Polynomial(v);
		}
		if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
			std::size_t start = pos_;
			while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
			std::string name(s_.substr(start, pos_ - start));
			if (name == "i") return Polynomial::i();
			auto x = SymbolTable::global().lookup(name);
			if (!x) {
				pos_ = start;
				fail("unknown symbol '" + name + "'");
			}
			return Polynomial(*x);
		}
		fail(std::string("unexpected '") + ch + "'");
	}

	std::string_view s_;
	std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "+ - * ^ ( )", integer and decimal literals, "2i"-style imaginary
/// literals, the unit "i", and registered symbol names. "a/7" divides by an
/// integer literal.
inline Polynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

}  // namespace shrank
