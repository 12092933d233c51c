#pragma once

#include "shrank/rational.hpp"

#include <ostream>
#include <string>

namespace shrank {

/// Exact element re + im*i of Q(i).
struct GaussianRational {
	Rational re;
	Rational im;

	GaussianRational() : re(0), im(0) {}
	GaussianRational(long v) : re(v), im(0) {}  // NOLINT: implicit by design of literals
	GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
	GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

	static GaussianRational i() { return {Rational(0), Rational(1)}; }

	bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
	bool is_real() const { return sgn(im) == 0; }

	GaussianRational conj() const { return {re, -im}; }
	/// |a|^2 = a * conj(a)
	Rational norm() const { return re * re + im * im; }

	GaussianRational operator-() const { return {-re, -im}; }
	GaussianRational& operator+=(const GaussianRational& o) {
		re += o.re;
		im += o.im;
		return *this;
	}
	GaussianRational& operator-=(const GaussianRational& o) {
		re -= o.re;
		im -= o.im;
		return *this;
	}
	GaussianRational& operator*=(const GaussianRational& o) {
		Rational r = re * o.re - im * o.im;
		Rational m = re * o.im + im * o.re;
		re = std::move(r);
		im = std::move(m);
		return *this;
	}
	GaussianRational& operator/=(const GaussianRational& o) {
		Rational n = o.norm();
		if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
		*this *= o.conj();
		re /= n;
		im /= n;
		return *this;
	}

	friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
	friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
	friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
	friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
	friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Formats as "3", "-i", "1/2+3i", "-2i".
inline std::string to_string(const GaussianRational& a) {
	auto imag_part = [](const Rational& v) {
		if (v == 1) return std::string("i");
		if (v == -1) return std::string("-i");
		return v.get_str() + "i";
	};
	if (a.is_zero()) return "0";
	if (sgn(a.im) == 0) return a.re.get_str();
	if (sgn(a.re) == 0) return imag_part(a.im);
	std::string s = a.re.get_str();
	std::string m = imag_part(a.im);
	if (m.front() != '-') s += '+';
	return s + m;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << to_string(a); }

/// Inverse of to_string; also accepts "a+bi" with whitespace and a bare "i".
inline GaussianRational parse_gaussian(std::string_view text) {
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
	if (s.empty()) throw InputError("empty complex number");
	if (s.back() != 'i') return GaussianRational(parse_rational(s));
	s.pop_back();
	// split at the last sign that is not the first character
	std::size_t split = std::string::npos;
	for (std::size_t k = s.size(); k-- > 1;)
		if (s[k] == '+' || s[k] == '-') {
			split = k;
			break;
		}
	auto coeff = [](std::string v) -> Rational {
		if (v.empty() || v == "+") return 1;
		if (v == "-") return -1;
		return parse_rational(v);
	};
	if (split == std::string::npos) return {Rational(0), coeff(s)};
	return {parse_rational(s.substr(0, split)), coeff(s.substr(split))};
}

}  // namespace shrank
