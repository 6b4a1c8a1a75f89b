#ifndef TENVAL_RATIONAL_HPP
#define TENVAL_RATIONAL_HPP

// Exact rational scalar type and the small amount of integer combinatorics
// used throughout: factorials, multinomials, and binomial coefficients with
// both the integer-argument convention and the generalized (rational top
// argument) definition.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tenval {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators,
// so every num/den construction funnels through here.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw BadParameter("make_rational: zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Parses "n" or "n/d" with optional leading minus. Anything else — in
// particular decimal points or exponents — is rejected.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw ParseError("parse_rational: not an exact rational: '" + text + "'");
    };
    if (text.empty()) return fail();
    std::size_t i = 0;
    auto read_int = [&](bool sign_ok) -> Int {
        std::size_t start = i;
        if (sign_ok && i < text.size() && text[i] == '-') ++i;
        std::size_t digits_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == digits_begin) fail();
        return Int(text.substr(start, i - start));
    };
    Int n = read_int(true);
    if (i == text.size()) return Rational(n);
    if (text[i] != '/') return fail();
    ++i;
    Int d = read_int(false);
    if (i != text.size()) return fail();
    if (d == 0) throw ParseError("parse_rational: zero denominator: '" + text + "'");
    return make_rational(n, d);
}

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw BadParameter("pow_rational: negative power of zero");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
    Rational acc(1);
    while (k) {
        if (k & 1ul) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Int factorial(int n) {
    if (n < 0) throw BadParameter("factorial of negative");
    Int acc(1);
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

// Integer-argument convention: zero whenever j < 0 or j > i.
inline Int binomial_int(long i, long j) {
    if (j < 0 || j > i) return Int(0);
    if (i < 0) return Int(0);
    j = std::min(j, i - j);
    Int acc(1);
    for (long k = 1; k <= j; ++k) {
        acc *= (i - k + 1);
        acc /= k;
    }
    return acc;
}

// Generalized binomial coefficient with rational top argument:
// C(r, k) = r (r-1) ... (r-k+1) / k!, and zero for k < 0.
inline Rational binomial_general(const Rational& r, long k) {
    if (k < 0) return Rational(0);
    Rational acc(1);
    for (long j = 0; j < k; ++j) acc *= (r - j);
    return acc / Rational(factorial(static_cast<int>(k)));
}

inline Int multinomial(int p, const std::vector<int>& parts) {
    Int acc = factorial(p);
    int total = 0;
    for (int k : parts) {
        if (k < 0) throw BadParameter("multinomial: negative part");
        acc /= factorial(k);
        total += k;
    }
    if (total != p) throw BadParameter("multinomial: parts do not sum to order");
    return acc;
}

// Decimal rendering at a fixed number of significant digits, exact rounding
// (ties away from zero). Positional form for moderate exponents, scientific
// otherwise; trailing zeros in the fraction are trimmed.
inline std::string to_decimal_string(const Rational& q, int sig_digits = 20) {
    if (sig_digits < 1) throw BadParameter("to_decimal_string: sig_digits < 1");
    if (q == 0) return "0";
    const bool neg = q < 0;
    Int n = neg ? Int(-numerator(q)) : numerator(q);
    Int d = denominator(q);

    auto pow10 = [](long k) {
        Int t(1);
        for (long j = 0; j < k; ++j) t *= 10;
        return t;
    };
    auto ge_pow10 = [&](long k) { // n/d >= 10^k ?
        return k >= 0 ? n >= d * pow10(k) : n * pow10(-k) >= d;
    };

    long e = static_cast<long>(n.str().size()) - static_cast<long>(d.str().size());
    while (ge_pow10(e + 1)) ++e;
    while (!ge_pow10(e)) --e;

    long t = sig_digits - 1 - e;
    Int num_scaled = t >= 0 ? n * pow10(t) : n;
    Int den_scaled = t >= 0 ? d : d * pow10(-t);
    Int digits = (2 * num_scaled + den_scaled) / (2 * den_scaled);
    if (digits == pow10(sig_digits)) {
        digits = pow10(sig_digits - 1);
        ++e;
    }

    std::string s = digits.str(); // exactly sig_digits digits
    std::string out;
    if (e >= 0 && e < sig_digits) {
        out = s.substr(0, static_cast<std::size_t>(e) + 1);
        std::string frac = s.substr(static_cast<std::size_t>(e) + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (e < 0 && e >= -5) {
        std::string frac(static_cast<std::size_t>(-e - 1), '0');
        frac += s;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = "0." + frac;
    } else {
        std::string frac = s.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = s.substr(0, 1);
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

} // namespace tenval

#endif
