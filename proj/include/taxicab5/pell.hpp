#pragma once

#include "taxicab5/gaussint.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace taxicab5 {

// Consecutive Pell numbers (P_{n-1}, P_n) under P_0 = 0, P_1 = 1,
// P_n = 2*P_{n-1} + P_{n-2}.
struct PellState {
    std::size_t index = 1;  // n
    bigint prev = 0;        // P_{n-1}
    bigint curr = 1;        // P_n

    static PellState initial() { return {}; }

    PellState next() const { return {index + 1, curr, 2 * curr + prev}; }
};

inline bigint pell(std::size_t n) {
    if (n == 0)
        return 0;
    PellState s = PellState::initial();
    while (s.index < n)
        s = s.next();
    return s.curr;
}

// Q_k = P_{2k} + P_{2k-1}; satisfies the Pell equation Q_k^2 - 2*P_{2k}^2 = 1.
inline bigint half_companion(std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("half_companion: k must be >= 1");
    PellState s = PellState::initial();
    while (s.index < 2 * k)
        s = s.next();
    return s.curr + s.prev;
}

/**
 * An ordered candidate (w, x, y, z) for w^e + x^e = y^e + z^e. Carrying
 * the exponent keeps verification and canonicalization self-contained;
 * nothing about the candidate is assumed valid until verify_solution.
 */
struct Quadruple {
    GaussInt w;
    GaussInt x;
    GaussInt y;
    GaussInt z;
    unsigned exponent = 5;

    friend bool operator==(const Quadruple &, const Quadruple &) = default;
};

inline bool verify_solution(const Quadruple &q) {
    return pow(q.w, q.exponent) + pow(q.x, q.exponent) ==
           pow(q.y, q.exponent) + pow(q.z, q.exponent);
}

/**
 * k-th member of the Pell-driven solution family:
 *
 *   (P_{2k}+1)^5 + (P_{2k}-1)^5 = (P_{2k} + i*Q_k)^5 + (P_{2k} - i*Q_k)^5
 *
 * where Q_k = P_{2k} + P_{2k-1}. The first members are
 * 3^5 + 1^5 = (2+3i)^5 + (2-3i)^5 and 13^5 + 11^5 = (12+17i)^5 + (12-17i)^5.
 * Only even Pell indices produce solutions: the gap identity below
 * vanishes exactly when Q^2 - 2*P^2 = 1, and (P_{2k}, Q_k) are precisely
 * the solutions of that Pell equation.
 */
inline Quadruple pell_family(std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("pell_family: k must be >= 1");
    PellState s = PellState::initial();
    while (s.index < 2 * k)
        s = s.next();
    bigint p = s.curr;           // P_{2k}
    bigint q = s.curr + s.prev;  // Q_k
    return Quadruple{GaussInt{p + 1}, GaussInt{p - 1}, GaussInt{p, q}, GaussInt{p, -q}, 5};
}

/**
 * The defect (a+b)^5 + (a-b)^5 - (a+ic)^5 - (a-ic)^5, evaluated with
 * exact Gaussian arithmetic. Expansion collapses it to the real value
 * 10*a*(b^2+c^2)*(2*a^2+b^2-c^2), so it vanishes iff a = 0, b = c = 0,
 * or c^2 - 2*a^2 = b^2; with b = 1 that is the Pell equation behind
 * pell_family.
 */
inline GaussInt pell_family_gap(const bigint &a, const bigint &b, const bigint &c) {
    GaussInt left = pow(GaussInt{a + b}, 5) + pow(GaussInt{a - b}, 5);
    GaussInt right = pow(GaussInt{a, c}, 5) + pow(GaussInt{a, -c}, 5);
    return left - right;
}

} // namespace taxicab5
