#pragma once

#include "taxicab5/gaussint.hpp"
#include "taxicab5/pell.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace taxicab5 {

// A Pythagorean triple a^2 + b^2 = c^2, stored larger leg first.
struct PythTriple {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    bool is_pythagorean() const { return a * a + b * b == c * c; }
    bool is_primitive() const { return std::gcd(a, b) == 1; }

    friend bool operator==(const PythTriple &, const PythTriple &) = default;
};

/**
 * Left side of the quintic identity
 *
 *   (a+b+ic)^5 + (a-b-ic)^5 - (a-b+ic)^5 - (a+b-ic)^5 = 80i*abc*(a^2+b^2-c^2)
 *
 * evaluated with exact Gaussian arithmetic. The value is always purely
 * imaginary; note the factor i on the closed form (the constant is 80i,
 * not 80: at (1,1,1) the left side is 80i).
 */
inline GaussInt lemma_lhs(const bigint &a, const bigint &b, const bigint &c) {
    return pow(GaussInt{a + b, c}, 5) + pow(GaussInt{a - b, -c}, 5) -
           pow(GaussInt{a - b, c}, 5) - pow(GaussInt{a + b, -c}, 5);
}

// Closed form of the identity above: the purely imaginary value
// 80*a*b*c*(a^2+b^2-c^2) * i.
inline GaussInt lemma_rhs(const bigint &a, const bigint &b, const bigint &c) {
    return GaussInt{0, 80 * a * b * c * (a * a + b * b - c * c)};
}

/**
 * All primitive Pythagorean triples with hypotenuse <= max_c, via the
 * classical parameterization (m^2-n^2, 2mn, m^2+n^2) over coprime m > n
 * of opposite parity. Emitted larger leg first, sorted by (c, a).
 * max_c < 5 yields an empty sequence.
 */
inline std::vector<PythTriple> enumerate_primitive_triples(long long max_c) {
    std::vector<PythTriple> out;
    for (long long m = 2; m * m + 1 <= max_c; ++m) {
        for (long long n = 1 + m % 2; n < m; n += 2) {
            if (std::gcd(m, n) != 1)
                continue;
            long long c = m * m + n * n;
            if (c > max_c)
                break;
            long long odd_leg = m * m - n * n;
            long long even_leg = 2 * m * n;
            out.push_back({std::max(odd_leg, even_leg), std::min(odd_leg, even_leg), c});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PythTriple &l, const PythTriple &r) {
                  return l.c != r.c ? l.c < r.c : l.a < r.a;
              });
    return out;
}

/**
 * Maps a Pythagorean triple to the all-Gaussian solution
 *
 *   (a+b+ic)^5 + (a-b-ic)^5 = (a+b-ic)^5 + (a-b+ic)^5
 *
 * which holds because a^2 + b^2 - c^2 = 0 kills the identity's right
 * side. Both side sums are real. (4,3,5) gives (7+5i, 1-5i, 7-5i, 1+5i).
 * Primitivity is not required.
 */
inline Quadruple triple_solution(const PythTriple &t) {
    if (!t.is_pythagorean())
        throw std::invalid_argument("triple_solution: a^2 + b^2 != c^2");
    bigint a = t.a, b = t.b, c = t.c;
    return Quadruple{GaussInt{a + b, c}, GaussInt{a - b, -c},
                     GaussInt{a + b, -c}, GaussInt{a - b, c}, 5};
}

} // namespace taxicab5
