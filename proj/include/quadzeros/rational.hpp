#ifndef QUADZEROS_RATIONAL_HPP
#define QUADZEROS_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "quadzeros/errors.hpp"

namespace quadzeros {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw InvalidParams("malformed number: '" + std::string(whole) + "'");
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw InvalidParams("malformed number: '" + std::string(whole) + "'");
        }
    }
    return Integer(std::string(s), 10);
}

inline Integer pow10(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace detail

/// Parses "7", "-2.1", "1.5e-3" or "10/27" into an exact rational.
/// Decimal input is read exactly ("0.3" is 3/10, not the nearest double).
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InvalidParams("empty number");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash), text);
        Integer den = detail::parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw InvalidParams("zero denominator: '" + std::string(text) + "'");
        value = Rational(num, den);
        value.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_part = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
                exp_negative = exp_part.front() == '-';
                exp_part.remove_prefix(1);
            }
            Integer e_val = detail::parse_integer(exp_part, text);
            if (!e_val.fits_slong_p() || abs(e_val) > 4096) {
                throw InvalidParams("exponent out of range: '" + std::string(text) + "'");
            }
            exponent = e_val.get_si() * (exp_negative ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string digits;
        long frac_digits = 0;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string_view int_part = s.substr(0, dot);
            std::string_view frac_part = s.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) {
                throw InvalidParams("malformed number: '" + std::string(text) + "'");
            }
            digits = std::string(int_part) + std::string(frac_part);
            frac_digits = static_cast<long>(frac_part.size());
        } else {
            digits = std::string(s);
        }
        Integer mantissa = detail::parse_integer(digits, text);
        long scale = exponent - frac_digits;
        if (scale >= 0) {
            value = Rational(mantissa * detail::pow10(static_cast<unsigned long>(scale)));
        } else {
            value = Rational(mantissa, detail::pow10(static_cast<unsigned long>(-scale)));
            value.canonicalize();
        }
    }
    return negative ? Rational(-value) : value;
}

/// Exact "p/q" text (or "p" for integers). Round-trips through parse_rational.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Truncating conversion (mpq_get_d); within one ulp of the exact value.
inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational from_double(double x) { return Rational(x); }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace quadzeros

#endif  // QUADZEROS_RATIONAL_HPP
