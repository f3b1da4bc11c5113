#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace taxicab5 {

using bigint = boost::multiprecision::cpp_int;

/**
 * GaussInt: a Gaussian integer re + im*i with arbitrary-precision
 * components. Plain value type; every operation is exact.
 */
struct GaussInt {
    bigint re;
    bigint im;

    GaussInt() = default;
    GaussInt(bigint r) : re(std::move(r)) {}
    GaussInt(bigint r, bigint i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussInt &, const GaussInt &) = default;

    // Fixed total order: lexicographic by (re, im). All deduplication
    // and deterministic output in the search relies on this order.
    friend std::strong_ordering operator<=>(const GaussInt &a, const GaussInt &b) {
        if (a.re != b.re)
            return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.im != b.im)
            return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    GaussInt operator-() const { return {-re, -im}; }

    friend GaussInt operator+(const GaussInt &a, const GaussInt &b) {
        return {a.re + b.re, a.im + b.im};
    }

    friend GaussInt operator-(const GaussInt &a, const GaussInt &b) {
        return {a.re - b.re, a.im - b.im};
    }

    friend GaussInt operator*(const GaussInt &a, const GaussInt &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussInt &operator+=(const GaussInt &o) { re += o.re; im += o.im; return *this; }
    GaussInt &operator-=(const GaussInt &o) { re -= o.re; im -= o.im; return *this; }
    GaussInt &operator*=(const GaussInt &o) { return *this = *this * o; }
};

inline GaussInt conj(const GaussInt &z) { return {z.re, -z.im}; }

// Multiplication by the unit i: (re, im) -> (-im, re).
inline GaussInt times_i(const GaussInt &z) { return {-z.im, z.re}; }

inline bigint norm(const GaussInt &z) { return z.re * z.re + z.im * z.im; }

inline GaussInt pow(const GaussInt &base, unsigned long long n) {
    GaussInt result{1};
    GaussInt sq = base;
    while (n != 0) {
        if (n & 1)
            result *= sq;
        sq *= sq;
        n >>= 1;
    }
    return result;
}

struct CanonicalAssociate {
    GaussInt value;        // i^unit_exponent * input
    int unit_exponent;     // in 0..3
};

/**
 * Rotates a nonzero Gaussian integer by the unique unit i^k that lands
 * it in the half-open first quadrant {re > 0, im >= 0}. The four
 * associates of a value all map to the same canonical representative.
 * Zero has no canonical associate and is rejected.
 */
inline CanonicalAssociate canonical_associate(const GaussInt &z) {
    if (z.is_zero())
        throw std::domain_error("canonical_associate: zero has no canonical associate");
    CanonicalAssociate c{z, 0};
    while (!(c.value.re > 0 && c.value.im >= 0)) {
        c.value = times_i(c.value);
        ++c.unit_exponent;
    }
    return c;
}

// Canonical printing: "0", "3", "-5", "2+3i", "2-3i", "-597i".
inline std::string to_string(const GaussInt &z) {
    if (z.im == 0)
        return z.re.str();
    if (z.re == 0)
        return z.im.str() + "i";
    std::string s = z.re.str();
    s += z.im > 0 ? '+' : '-';
    bigint magnitude = z.im > 0 ? z.im : bigint(-z.im);
    s += magnitude.str();
    s += 'i';
    return s;
}

inline std::ostream &operator<<(std::ostream &os, const GaussInt &z) {
    return os << to_string(z);
}

// JSON form used by the CLI and the search result stream. Components
// are decimal strings so arbitrary-precision values survive transport.
inline std::string to_json(const GaussInt &z) {
    return "{\"re\":\"" + z.re.str() + "\",\"im\":\"" + z.im.str() + "\"}";
}

namespace detail {

inline bool scan_signed_digits(std::string_view s, std::size_t &pos, bigint &out) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    bigint value = 0;
    // Accumulate by hand: the bigint string constructor would honor
    // C-style 0x/0 radix prefixes, which this grammar does not have.
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        value = value * 10 + (s[pos] - '0');
        ++pos;
    }
    if (pos == digits_begin) {
        pos = start;
        return false;
    }
    out = negative ? bigint(-value) : std::move(value);
    return true;
}

} // namespace detail

// Strict decimal integer: SIGN? DIGITS, nothing else.
inline std::optional<bigint> parse_integer(std::string_view s) {
    std::size_t pos = 0;
    bigint value;
    if (!detail::scan_signed_digits(s, pos, value) || pos != s.size())
        return std::nullopt;
    return value;
}

/**
 * Parses the Gaussian integer grammar
 *   gaussint := SIGN? DIGITS | SIGN? DIGITS SIGN DIGITS "i" | SIGN? DIGITS "i"
 * e.g. "3", "-5", "2+3i", "2-3i", "-597i". Returns nullopt on any
 * deviation (whitespace, missing digits, trailing junk, ...).
 */
inline std::optional<GaussInt> parse_gaussint(std::string_view s) {
    std::size_t pos = 0;
    bigint first;
    if (!detail::scan_signed_digits(s, pos, first))
        return std::nullopt;
    if (pos == s.size())
        return GaussInt{std::move(first)};
    if (s[pos] == 'i') {
        if (pos + 1 != s.size())
            return std::nullopt;
        return GaussInt{0, std::move(first)};
    }
    bigint second;
    if (!detail::scan_signed_digits(s, pos, second))
        return std::nullopt;
    if (pos == s.size() || s[pos] != 'i' || pos + 1 != s.size())
        return std::nullopt;
    return GaussInt{std::move(first), std::move(second)};
}

} // namespace taxicab5
