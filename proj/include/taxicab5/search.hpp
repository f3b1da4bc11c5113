#pragma once

#include "taxicab5/gaussint.hpp"
#include "taxicab5/pell.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace taxicab5 {

struct SearchConfig {
    long long bound = 1;        // box |re| <= bound, |im| <= bound
    unsigned exponent = 5;
    unsigned shards = 1;        // parallelism degree; never affects output
    bool include_zero = false;  // admit 0 as a term
};

// One solution up to symmetry: the canonical orbit representative, the
// number of distinct quadruples in its orbit, and the common value of
// both sides.
struct SolutionClass {
    Quadruple representative;
    std::size_t orbit_size = 0;
    GaussInt sum;

    friend bool operator==(const SolutionClass &, const SolutionClass &) = default;
};

// Total order used to pick orbit representatives: compare the sorted
// component lists first, then break ties positionally. Two quadruples
// compare equal only when they are identical.
inline bool quadruple_order_less(const Quadruple &a, const Quadruple &b) {
    auto sorted_view = [](const Quadruple &q) {
        std::array<const GaussInt *, 4> v{&q.w, &q.x, &q.y, &q.z};
        std::sort(v.begin(), v.end(),
                  [](const GaussInt *l, const GaussInt *r) { return *l < *r; });
        return v;
    };
    auto sa = sorted_view(a);
    auto sb = sorted_view(b);
    for (int i = 0; i < 4; ++i) {
        auto c = *sa[i] <=> *sb[i];
        if (c != 0)
            return c < 0;
    }
    const GaussInt *pa[4] = {&a.w, &a.x, &a.y, &a.z};
    const GaussInt *pb[4] = {&b.w, &b.x, &b.y, &b.z};
    for (int i = 0; i < 4; ++i) {
        auto c = *pa[i] <=> *pb[i];
        if (c != 0)
            return c < 0;
    }
    return false;
}

/**
 * All 64 images of a quadruple under the solution symmetry group,
 * generated by the two in-pair swaps, the pair exchange, global
 * conjugation, and global multiplication by a unit i^k. Every image of
 * a solution is again a solution: conjugation is a ring homomorphism,
 * and multiplying all four entries by i^k scales both side sums by the
 * same unit i^(e*k). Entries may repeat when the quadruple has a
 * nontrivial stabilizer.
 */
inline std::vector<Quadruple> solution_orbit(const Quadruple &q) {
    std::vector<Quadruple> orbit;
    orbit.reserve(64);
    for (int swap_wx = 0; swap_wx < 2; ++swap_wx)
        for (int swap_yz = 0; swap_yz < 2; ++swap_yz)
            for (int swap_pairs = 0; swap_pairs < 2; ++swap_pairs)
                for (int conjugate = 0; conjugate < 2; ++conjugate)
                    for (int unit = 0; unit < 4; ++unit) {
                        Quadruple t = q;
                        if (swap_wx)
                            std::swap(t.w, t.x);
                        if (swap_yz)
                            std::swap(t.y, t.z);
                        if (swap_pairs) {
                            std::swap(t.w, t.y);
                            std::swap(t.x, t.z);
                        }
                        if (conjugate) {
                            t.w = conj(t.w);
                            t.x = conj(t.x);
                            t.y = conj(t.y);
                            t.z = conj(t.z);
                        }
                        for (int r = 0; r < unit; ++r) {
                            t.w = times_i(t.w);
                            t.x = times_i(t.x);
                            t.y = times_i(t.y);
                            t.z = times_i(t.z);
                        }
                        orbit.push_back(std::move(t));
                    }
    return orbit;
}

// Minimal orbit element under quadruple_order_less. Idempotent. Input
// must be an actual solution.
inline Quadruple canonicalize_solution(const Quadruple &q) {
    if (!verify_solution(q))
        throw std::invalid_argument("canonicalize_solution: quadruple is not a solution");
    std::vector<Quadruple> orbit = solution_orbit(q);
    return *std::min_element(orbit.begin(), orbit.end(), quadruple_order_less);
}

namespace detail {

using FlatKey = std::array<bigint, 8>;

inline FlatKey positional_key(const Quadruple &q) {
    return {q.w.re, q.w.im, q.x.re, q.x.im, q.y.re, q.y.im, q.z.re, q.z.im};
}

struct FlatKeyLess {
    bool operator()(const FlatKey &a, const FlatKey &b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i])
                return a[i] < b[i];
        }
        return false;
    }
};

// Assumes rep is already canonical; fills in orbit size and side sum.
inline SolutionClass finish_class(Quadruple rep) {
    std::vector<Quadruple> orbit = solution_orbit(rep);
    std::sort(orbit.begin(), orbit.end(), quadruple_order_less);
    auto distinct = std::unique(orbit.begin(), orbit.end());
    GaussInt sum = pow(rep.w, rep.exponent) + pow(rep.x, rep.exponent);
    std::size_t orbit_size = static_cast<std::size_t>(distinct - orbit.begin());
    return SolutionClass{std::move(rep), orbit_size, std::move(sum)};
}

} // namespace detail

// Builds the solution class of a verified, non-trivial quadruple.
inline SolutionClass make_solution_class(const Quadruple &q) {
    std::array<const GaussInt *, 2> lhs{&q.w, &q.x};
    std::array<const GaussInt *, 2> rhs{&q.y, &q.z};
    auto less = [](const GaussInt *l, const GaussInt *r) { return *l < *r; };
    std::sort(lhs.begin(), lhs.end(), less);
    std::sort(rhs.begin(), rhs.end(), less);
    if (*lhs[0] == *rhs[0] && *lhs[1] == *rhs[1])
        throw std::invalid_argument("make_solution_class: {w,x} == {y,z} is trivial");
    return detail::finish_class(canonicalize_solution(q));
}

struct SearchStats {
    std::size_t points = 0;
    std::uint64_t pairs = 0;                 // unordered pairs enumerated
    std::size_t collision_groups = 0;        // sum groups with >= 2 pairs
    std::uint64_t candidate_quadruples = 0;  // cross-pairs extracted
};

/**
 * Exhaustive collision search over the box of Gaussian integers with
 * |re|, |im| <= bound. Enumerates every unordered pair {p, q} of box
 * points (p = q allowed), groups the pairs by the exact value of
 * p^e + q^e, turns every group of size >= 2 into solution classes, and
 * returns the classes sorted by (norm(sum), representative order).
 *
 * The output is a pure function of the config: sharding only splits the
 * outer enumeration loop, and the merged groups are re-sorted before
 * extraction, so any shard count produces identical results.
 */
inline std::vector<SolutionClass> run_search(const SearchConfig &cfg,
                                             SearchStats *stats = nullptr) {
    if (cfg.bound < 1)
        throw std::invalid_argument("run_search: bound must be >= 1");
    if (cfg.shards < 1)
        throw std::invalid_argument("run_search: shards must be >= 1");
    // Pair refs are 32-bit point indices; (2B+1)^2 must stay below 2^32.
    if (cfg.bound > 30000)
        throw std::invalid_argument("run_search: bound too large to index");

    // Box points in the fixed (re, im)-lexicographic order.
    std::vector<GaussInt> points;
    const long long bound = cfg.bound;
    points.reserve(static_cast<std::size_t>((2 * bound + 1) * (2 * bound + 1)));
    for (long long re = -bound; re <= bound; ++re)
        for (long long im = -bound; im <= bound; ++im) {
            if (re == 0 && im == 0 && !cfg.include_zero)
                continue;
            points.push_back(GaussInt{re, im});
        }

    std::vector<GaussInt> powers;
    powers.reserve(points.size());
    for (const GaussInt &p : points)
        powers.push_back(pow(p, cfg.exponent));

    using PairRef = std::pair<std::uint32_t, std::uint32_t>;
    using GroupMap = std::map<GaussInt, std::vector<PairRef>>;

    const auto point_count = static_cast<std::uint32_t>(points.size());
    std::vector<GroupMap> shard_maps(cfg.shards);
    auto fill_shard = [&](unsigned shard) {
        GroupMap &groups = shard_maps[shard];
        for (std::uint32_t i = shard; i < point_count; i += cfg.shards)
            for (std::uint32_t j = i; j < point_count; ++j)
                groups[powers[i] + powers[j]].push_back({i, j});
    };
    if (cfg.shards == 1) {
        fill_shard(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(cfg.shards - 1);
        for (unsigned shard = 1; shard < cfg.shards; ++shard)
            workers.emplace_back(fill_shard, shard);
        fill_shard(0);
        for (std::thread &t : workers)
            t.join();
    }

    GroupMap merged = std::move(shard_maps[0]);
    for (unsigned shard = 1; shard < cfg.shards; ++shard)
        for (auto &[key, pairs] : shard_maps[shard]) {
            std::vector<PairRef> &dst = merged[key];
            dst.insert(dst.end(), pairs.begin(), pairs.end());
        }
    for (auto &[key, pairs] : merged)
        std::sort(pairs.begin(), pairs.end());

    SearchStats local;
    local.points = points.size();
    local.pairs = static_cast<std::uint64_t>(point_count) * (point_count + 1) / 2;

    // Distinct unordered pairs over distinct points can never form a
    // trivial {w,x} == {y,z} collision, so no filter is needed here.
    std::map<detail::FlatKey, SolutionClass, detail::FlatKeyLess> classes;
    for (const auto &[sum, group] : merged) {
        if (group.size() < 2)
            continue;
        ++local.collision_groups;
        for (std::size_t a = 0; a + 1 < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                ++local.candidate_quadruples;
                Quadruple q{points[group[a].first], points[group[a].second],
                            points[group[b].first], points[group[b].second],
                            cfg.exponent};
                Quadruple rep = canonicalize_solution(q);
                detail::FlatKey key = detail::positional_key(rep);
                if (!classes.contains(key))
                    classes.emplace(std::move(key), detail::finish_class(std::move(rep)));
            }
    }

    // Map order is already the representative order; a stable sort by
    // norm of the common sum yields the (norm, representative) order.
    std::vector<std::pair<bigint, SolutionClass>> decorated;
    decorated.reserve(classes.size());
    for (auto &[key, cls] : classes)
        decorated.emplace_back(norm(cls.sum), std::move(cls));
    std::stable_sort(decorated.begin(), decorated.end(),
                     [](const auto &l, const auto &r) { return l.first < r.first; });

    std::vector<SolutionClass> out;
    out.reserve(decorated.size());
    for (auto &[n, cls] : decorated)
        out.push_back(std::move(cls));
    if (stats != nullptr)
        *stats = local;
    return out;
}

// One JSON-lines record of the search result stream.
inline std::string to_json_line(const SolutionClass &c) {
    std::string s = "{\"w\":";
    s += to_json(c.representative.w);
    s += ",\"x\":";
    s += to_json(c.representative.x);
    s += ",\"y\":";
    s += to_json(c.representative.y);
    s += ",\"z\":";
    s += to_json(c.representative.z);
    s += ",\"sum\":";
    s += to_json(c.sum);
    s += ",\"orbit_size\":";
    s += std::to_string(c.orbit_size);
    s += "}";
    return s;
}

} // namespace taxicab5
