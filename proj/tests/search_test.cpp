#include "taxicab5/search.hpp"

#include "oracles.hpp"
#include "taxicab5/identities.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <functional>
#include <set>
#include <string>

using namespace taxicab5;

namespace {

struct QuadLess {
    bool operator()(const Quadruple &a, const Quadruple &b) const {
        return quadruple_order_less(a, b);
    }
};

oracle::Quad64 to64(const Quadruple &q) {
    auto g = [](const GaussInt &v) {
        return oracle::G64{v.re.convert_to<long long>(), v.im.convert_to<long long>()};
    };
    return {g(q.w), g(q.x), g(q.y), g(q.z)};
}

Quadruple pell_first() {
    return {GaussInt(3), GaussInt(1), GaussInt(2, 3), GaussInt(2, -3), 5};
}

// Closure of {q} under single generator applications; must agree with
// the 64-element sweep if the sweep really covers the whole group.
std::set<Quadruple, QuadLess> generator_closure(const Quadruple &q) {
    std::vector<std::function<Quadruple(Quadruple)>> generators = {
        [](Quadruple t) { std::swap(t.w, t.x); return t; },
        [](Quadruple t) { std::swap(t.y, t.z); return t; },
        [](Quadruple t) { std::swap(t.w, t.y); std::swap(t.x, t.z); return t; },
        [](Quadruple t) {
            t.w = conj(t.w); t.x = conj(t.x); t.y = conj(t.y); t.z = conj(t.z);
            return t;
        },
        [](Quadruple t) {
            t.w = times_i(t.w); t.x = times_i(t.x); t.y = times_i(t.y); t.z = times_i(t.z);
            return t;
        },
    };
    std::set<Quadruple, QuadLess> seen{q};
    std::deque<Quadruple> frontier{q};
    while (!frontier.empty()) {
        Quadruple cur = frontier.front();
        frontier.pop_front();
        for (const auto &gen : generators) {
            Quadruple next = gen(cur);
            if (seen.insert(next).second)
                frontier.push_back(next);
        }
    }
    return seen;
}

void expect_matches_oracle(const SearchConfig &cfg) {
    std::vector<SolutionClass> got = run_search(cfg);
    auto want = oracle::brute_force_classes(cfg.bound, cfg.exponent, cfg.include_zero);
    EXPECT_EQ(got.size(), want.size()) << "bound=" << cfg.bound;
    for (const SolutionClass &cls : got) {
        auto it = want.find(oracle::flatten(to64(cls.representative)));
        ASSERT_NE(it, want.end()) << "unexpected class " << to_json_line(cls);
        EXPECT_EQ(cls.orbit_size, it->second.orbit_size);
        EXPECT_EQ(cls.sum.re, bigint(it->second.sum.re));
        EXPECT_EQ(cls.sum.im, bigint(it->second.sum.im));
    }
}

std::string json_stream(const std::vector<SolutionClass> &classes) {
    std::string s;
    for (const SolutionClass &cls : classes) {
        s += to_json_line(cls);
        s += '\n';
    }
    return s;
}

} // namespace

TEST(Canonicalize, PairSwapsReachTheSameRepresentative) {
    Quadruple swapped{GaussInt(2, -3), GaussInt(2, 3), GaussInt(1), GaussInt(3), 5};
    EXPECT_EQ(canonicalize_solution(swapped), canonicalize_solution(pell_first()));
}

TEST(Canonicalize, Idempotent) {
    Quadruple rep = canonicalize_solution(pell_first());
    EXPECT_EQ(canonicalize_solution(rep), rep);

    Quadruple rep2 = canonicalize_solution(triple_solution({12, 5, 13}));
    EXPECT_EQ(canonicalize_solution(rep2), rep2);
}

TEST(Canonicalize, RejectsNonSolutions) {
    Quadruple bogus{GaussInt(1), GaussInt(2), GaussInt(3), GaussInt(4), 5};
    EXPECT_THROW(canonicalize_solution(bogus), std::invalid_argument);
}

TEST(Canonicalize, AllTransformsShareOneRepresentative) {
    Quadruple q = triple_solution({4, 3, 5});
    Quadruple rep = canonicalize_solution(q);
    for (const Quadruple &element : solution_orbit(q)) {
        ASSERT_TRUE(verify_solution(element));
        ASSERT_EQ(canonicalize_solution(element), rep);
    }
}

TEST(Canonicalize, SweepCoversTheGeneratedGroup) {
    for (const Quadruple &q : {pell_first(), triple_solution({4, 3, 5})}) {
        std::vector<Quadruple> sweep = solution_orbit(q);
        std::set<Quadruple, QuadLess> sweep_set(sweep.begin(), sweep.end());
        EXPECT_EQ(sweep_set, generator_closure(q));
    }
}

TEST(Canonicalize, MatchesIndependentInt64Canonicalizer) {
    for (const Quadruple &q :
         {pell_first(), triple_solution({4, 3, 5}), triple_solution({12, 5, 13}),
          Quadruple{GaussInt(1), GaussInt(-1), GaussInt(0, 1), GaussInt(0, -1), 5}}) {
        Quadruple rep = canonicalize_solution(q);
        EXPECT_EQ(oracle::flatten(to64(rep)), oracle::flatten(oracle::canonicalize(to64(q))));
    }
}

TEST(SolutionClassTest, PellClassFacts) {
    SolutionClass cls = make_solution_class(pell_first());
    EXPECT_EQ(cls.orbit_size, generator_closure(pell_first()).size());
    EXPECT_EQ(cls.orbit_size, 32u);
    // Representative's sides still sum to a unit multiple of 3^5 + 1^5.
    EXPECT_EQ(norm(cls.sum), bigint(244) * 244);
    EXPECT_TRUE(verify_solution(cls.representative));
}

TEST(SolutionClassTest, TrivialRearrangementRejected) {
    Quadruple trivial{GaussInt(3), GaussInt(1), GaussInt(1), GaussInt(3), 5};
    EXPECT_THROW(make_solution_class(trivial), std::invalid_argument);
}

TEST(RunSearch, MatchesBruteForceOracleAtSmallBounds) {
    for (long long bound = 1; bound <= 4; ++bound) {
        SearchConfig cfg;
        cfg.bound = bound;
        expect_matches_oracle(cfg);
    }
}

TEST(RunSearch, MatchesOracleWithZeroIncluded) {
    SearchConfig cfg;
    cfg.bound = 2;
    cfg.include_zero = true;
    expect_matches_oracle(cfg);
}

TEST(RunSearch, MatchesOracleAtExponentOne) {
    SearchConfig cfg;
    cfg.bound = 1;
    cfg.exponent = 1;
    expect_matches_oracle(cfg);
}

TEST(RunSearch, KnownClassCounts) {
    SearchConfig cfg;
    cfg.bound = 1;
    EXPECT_EQ(run_search(cfg).size(), 3u);
    cfg.bound = 2;
    EXPECT_EQ(run_search(cfg).size(), 23u);
    cfg.bound = 3;
    EXPECT_EQ(run_search(cfg).size(), 86u);
}

TEST(RunSearch, ContainsPellFamilyClassAtBoundThree) {
    SearchConfig cfg;
    cfg.bound = 3;
    std::vector<SolutionClass> classes = run_search(cfg);
    SolutionClass expected = make_solution_class(pell_first());
    bool found = false;
    for (const SolutionClass &cls : classes)
        found = found || cls == expected;
    EXPECT_TRUE(found);
}

TEST(RunSearch, ShardCountDoesNotChangeOutput) {
    SearchConfig cfg;
    cfg.bound = 5;
    cfg.shards = 1;
    std::string one = json_stream(run_search(cfg));
    cfg.shards = 2;
    std::string two = json_stream(run_search(cfg));
    cfg.shards = 8;
    std::string eight = json_stream(run_search(cfg));
    EXPECT_EQ(one, two);
    EXPECT_EQ(one, eight);
    EXPECT_FALSE(one.empty());
}

TEST(RunSearch, EmittedClassesAreSoundCanonicalAndOrdered) {
    SearchConfig cfg;
    cfg.bound = 4;
    std::vector<SolutionClass> classes = run_search(cfg);
    ASSERT_FALSE(classes.empty());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Quadruple &rep = classes[i].representative;
        EXPECT_TRUE(verify_solution(rep));
        EXPECT_EQ(canonicalize_solution(rep), rep);

        std::array<GaussInt, 2> lhs{rep.w, rep.x};
        std::array<GaussInt, 2> rhs{rep.y, rep.z};
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        EXPECT_NE(lhs, rhs) << "trivial class emitted";

        if (i > 0) {
            bigint prev = norm(classes[i - 1].sum);
            bigint cur = norm(classes[i].sum);
            EXPECT_TRUE(prev < cur ||
                        (prev == cur && quadruple_order_less(classes[i - 1].representative,
                                                             classes[i].representative)));
        }
    }
}

TEST(RunSearch, SymmetryClosureOfEmittedClasses) {
    SearchConfig cfg;
    cfg.bound = 3;
    for (const SolutionClass &cls : run_search(cfg)) {
        std::vector<Quadruple> orbit = solution_orbit(cls.representative);
        for (std::size_t i = 0; i < orbit.size(); i += 7)
            EXPECT_EQ(canonicalize_solution(orbit[i]), cls.representative);
    }
}

TEST(RunSearch, ReportsStats) {
    SearchConfig cfg;
    cfg.bound = 2;
    SearchStats stats;
    run_search(cfg, &stats);
    EXPECT_EQ(stats.points, 24u);
    EXPECT_EQ(stats.pairs, 300u);
    EXPECT_GT(stats.collision_groups, 0u);
    EXPECT_GT(stats.candidate_quadruples, 0u);
}

TEST(RunSearch, RejectsInvalidConfig) {
    SearchConfig cfg;
    cfg.bound = 0;
    EXPECT_THROW(run_search(cfg), std::invalid_argument);
    cfg.bound = 2;
    cfg.shards = 0;
    EXPECT_THROW(run_search(cfg), std::invalid_argument);
}

TEST(JsonLines, RecordLayout) {
    SolutionClass cls{pell_first(), 32, GaussInt(244)};
    EXPECT_EQ(to_json_line(cls),
              R"({"w":{"re":"3","im":"0"},"x":{"re":"1","im":"0"},"y":{"re":"2","im":"3"},)"
              R"("z":{"re":"2","im":"-3"},"sum":{"re":"244","im":"0"},"orbit_size":32})");
}
