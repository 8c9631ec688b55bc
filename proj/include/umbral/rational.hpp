#pragma once

// Exact scalar arithmetic. The whole exact core works over Q: every
// coefficient, moment and table entry is a Rational, so identity checks
// compare with zero tolerance. Arbitrary precision is delegated to
// boost::multiprecision (cpp_int / cpp_rational), which already keeps
// rationals reduced with a positive denominator and canonical equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "umbral/errors.hpp"

namespace umbral {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with den != 0; sign moves to the numerator, result is reduced.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Exact conversion to a machine integer; throws when r is not integral
/// or does not fit.
inline std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw validation_error("expected an integer, got " +
                                               r.str());
    const Int n = numerator(r);
    if (n > (std::numeric_limits<std::int64_t>::max)() ||
        n < (std::numeric_limits<std::int64_t>::min)())
        throw validation_error("integer out of range: " + n.str());
    return n.convert_to<std::int64_t>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact at every step: b is C(n, i+1) * (i+1)! / ...
    }
    return b;
}

/// r^e for integer e; negative exponents require r != 0.
inline Rational rat_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw validation_error("zero raised to a negative power");
        return 1 / rat_pow(r, -e);
    }
    Rational acc = 1, base = r;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

/// Canonical form "p/q", or just "p" when q = 1; minus sign on the numerator.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Accepts optional leading '-', digits, optionally "/digits" (denominator
/// positive). The result is reduced, so parse/format round-trips canonically.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw validation_error("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    Int num(std::string(text.substr(num_begin, i - num_begin)));
    Int den = 1;
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size()) fail();
        den = Int(std::string(text.substr(den_begin)));
        if (den == 0) fail();
    }
    Rational r = make_rational(num, den);
    return neg ? -r : r;
}

}  // namespace umbral
