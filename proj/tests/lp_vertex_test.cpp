#include <algorithm>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace powerpoly {
namespace {

using testing::Q;
using testing::Qv;
using testing::RandomRationals;

TEST(LinearProgram, SmallOptimum) {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0 -> (8/5, 6/5), value 14/5.
    LinearProgram lp(2);
    lp.add({1, 2}, Sense::LessEqual, 4);
    lp.add({3, 1}, Sense::LessEqual, 6);
    lp.nonnegative = {true, true};
    lp.objective = {1, 1};
    LPResult r = solve(lp);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, Q("14/5"));
    EXPECT_EQ(r.x, Qv({"8/5", "6/5"}));
}

TEST(LinearProgram, FreeVariablesAndEqualities) {
    // min x - y s.t. x + y = 1, -2 <= x <= 2, y <= 5 with x, y free.
    LinearProgram lp(2);
    lp.add({1, 1}, Sense::Equal, 1);
    lp.add({1, 0}, Sense::GreaterEqual, -2);
    lp.add({1, 0}, Sense::LessEqual, 2);
    lp.add({0, 1}, Sense::LessEqual, 5);
    lp.objective = {1, -1};
    lp.maximize = false;
    LPResult r = solve(lp);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, -5);
    EXPECT_EQ(r.x, Qv({"-2", "3"}));
}

TEST(LinearProgram, InfeasibleAndUnbounded) {
    LinearProgram a(1);
    a.add({1}, Sense::GreaterEqual, 2);
    a.add({1}, Sense::LessEqual, 1);
    EXPECT_EQ(solve(a).status, LPStatus::Infeasible);

    LinearProgram b(2);
    b.add({1, -1}, Sense::LessEqual, 1);
    b.nonnegative = {true, true};
    b.objective = {1, 1};
    EXPECT_EQ(solve(b).status, LPStatus::Unbounded);
}

TEST(LinearProgram, DegenerateCycleProne) {
    // Beale's example; Dantzig's rule cycles without an anti-cycling fallback.
    LinearProgram lp(4);
    lp.add({Q("1/4"), -60, Q("-1/25"), 9}, Sense::LessEqual, 0);
    lp.add({Q("1/2"), -90, Q("-1/50"), 3}, Sense::LessEqual, 0);
    lp.add({0, 0, 1, 0}, Sense::LessEqual, 1);
    lp.nonnegative = {true, true, true, true};
    lp.objective = {Q("3/4"), -150, Q("1/50"), -6};
    LPResult r = solve(lp);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, Q("1/20"));
}

TEST(LinearProgram, RandomFeasiblePointsSatisfyConstraints) {
    RandomRationals rnd(61);
    for (int i = 0; i < 100; ++i) {
        LinearProgram lp(3);
        RationalVector anchor = rnd.point(3);
        for (int j = 0; j < 6; ++j) {
            RationalVector row = rnd.point(3);
            lp.add(row, Sense::LessEqual, dot(row, anchor) + rnd.unit());
        }
        for (int j = 0; j < 3; ++j) {
            RationalVector e(3, 0);
            e[j] = 1;
            lp.add(e, Sense::LessEqual, 10);
            lp.add(e, Sense::GreaterEqual, -10);
        }
        lp.objective = rnd.point(3);
        LPResult r = solve(lp);
        ASSERT_EQ(r.status, LPStatus::Optimal);
        EXPECT_GE(r.value, dot(lp.objective, anchor));
        for (const auto& c : lp.constraints) {
            if (c.sense == Sense::LessEqual) EXPECT_LE(dot(c.row, r.x), c.rhs);
            if (c.sense == Sense::GreaterEqual) EXPECT_GE(dot(c.row, r.x), c.rhs);
        }
    }
}

std::vector<Halfspace> box(std::size_t d) {
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < d; ++i) {
        RationalVector e(d, 0);
        e[i] = 1;
        hs.push_back({e, 1});
        e[i] = -1;
        hs.push_back({e, 0});
    }
    return hs;
}

TEST(VertexEnumeration, UnitCube) {
    auto v = enumerate_polytope_vertices(box(3), 3);
    ASSERT_EQ(v.size(), 8u);
    EXPECT_EQ(v.front(), Qv({"0", "0", "0"}));
    EXPECT_EQ(v.back(), Qv({"1", "1", "1"}));
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end(), lex_less));
}

TEST(VertexEnumeration, CrossPolytopeWithRedundantRows) {
    // |x| + |y| + |z| <= 1 as eight facets, plus two redundant copies.
    std::vector<Halfspace> hs;
    for (int s = 0; s < 8; ++s)
        hs.push_back({{s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1}, 1});
    hs.push_back({{1, 0, 0}, 5});
    hs.push_back({{2, 2, 2}, 2});
    auto v = enumerate_polytope_vertices(hs, 3);
    EXPECT_EQ(v.size(), 6u);
}

TEST(VertexEnumeration, VerticesAreTightAndFeasible) {
    RandomRationals rnd(71);
    for (int i = 0; i < 30; ++i) {
        auto hs = box(3);
        for (int j = 0; j < 5; ++j) {
            RationalVector a = rnd.point(3);
            hs.push_back({a, dot(a, Qv({"1/2", "1/2", "1/2"})) + rnd.unit()});
        }
        auto vs = enumerate_polytope_vertices(hs, 3);
        ASSERT_FALSE(vs.empty());
        for (const auto& v : vs) {
            std::size_t tight = 0;
            for (const auto& h : hs) {
                EXPECT_LE(dot(h.a, v), h.b);
                if (dot(h.a, v) == h.b) ++tight;
            }
            EXPECT_GE(tight, 3u);
        }
        // Every vertex maximizes some objective: check against an LP optimum.
        LinearProgram lp(3);
        for (const auto& h : hs) lp.add(h.a, Sense::LessEqual, h.b);
        lp.objective = rnd.point(3);
        LPResult r = solve(lp);
        ASSERT_EQ(r.status, LPStatus::Optimal);
        Rational best = dot(lp.objective, vs.front());
        for (const auto& v : vs) best = std::max(best, dot(lp.objective, v));
        EXPECT_EQ(best, r.value);
    }
}

}  // namespace
}  // namespace powerpoly
