#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shrank {

using Rational = mpq_class;

/// Raised for malformed user input: rationals, algebra text, flags.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "p", "p/q", and decimal strings such as "-0.25" or "3.".
inline Rational parse_rational(std::string_view text) {
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
	if (s.empty()) throw InputError("empty rational");

	auto all_digits = [](std::string_view v) {
		if (v.empty()) return false;
		for (char ch : v)
			if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
		return true;
	};

	bool negative = false;
	std::string_view body(s);
	if (body.front() == '+' || body.front() == '-') {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}

	Rational value;
	if (auto slash = body.find('/'); slash != std::string_view::npos) {
		auto num = body.substr(0, slash), den = body.substr(slash + 1);
		if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational '" + s + "'");
		mpz_class d{std::string(den)};
		if (d == 0) throw InputError("zero denominator in '" + s + "'");
		value = Rational(mpz_class(std::string(num)), d);
		value.canonicalize();
	} else if (auto dot = body.find('.'); dot != std::string_view::npos) {
		auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
		if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
			throw InputError("malformed decimal '" + s + "'");
		mpz_class scale = 1;
		for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
		mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip));
		mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp));
		value = Rational(whole * scale + frac, scale);
		value.canonicalize();
	} else {
		if (!all_digits(body)) throw InputError("malformed rational '" + s + "'");
		value = Rational(mpz_class(std::string(body)));
	}
	return negative ? Rational(-value) : value;
}

}  // namespace shrank
