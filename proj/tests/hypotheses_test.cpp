#include <gtest/gtest.h>

#include "test_support.hpp"

namespace powerpoly {
namespace {

using testing::P;
using testing::Q;
using testing::Qv;

void expect_null_points(const NullHypothesis& h, std::size_t count, std::uint64_t seed) {
    auto pts = sample_null_points(h, count, seed);
    ASSERT_EQ(pts.size(), count);
    for (const auto& s : pts) {
        ASSERT_EQ(s.size(), h.k);
        Rational total = 0;
        for (const auto& x : s) {
            EXPECT_GE(x, 0);
            total += x;
        }
        EXPECT_EQ(total, 1);
        for (const auto& g : h.generators) EXPECT_EQ(evaluate(g, s), 0) << to_string(s);
        if (h.kind == HypothesisKind::Polytope) {
            RationalVector head(s.begin(), s.end() - 1);
            for (std::size_t i = 0; i < h.matrix.size(); ++i) EXPECT_GE(dot(h.matrix[i], head), h.vector[i]);
        }
    }
}

TEST(Builders, IndependenceTwoByTwo) {
    NullHypothesis h = independence(2, 2);
    ASSERT_EQ(h.generators.size(), 1u);
    EXPECT_EQ(h.variables, (std::vector<std::string>{"p11", "p12", "p21", "p22"}));
    std::vector<std::string> head{"p11", "p12", "p21"};
    EXPECT_EQ(h.substituted_generators()[0],
              parse_poly("p11", head) * parse_poly("1 - p11 - p12 - p21", head) - parse_poly("p12*p21", head));
}

TEST(Builders, MinorCounts) {
    EXPECT_EQ(rank_less_than(3, 3, 3).generators.size(), 1u);
    EXPECT_EQ(rank_less_than(2, 3, 2).generators.size(), 3u);
    for (auto [p, q] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
        NullHypothesis h = independence(p, q);
        EXPECT_EQ(h.generators.size(), binomial(p, 2).get_ui() * binomial(q, 2).get_ui());
        for (const auto& g : h.generators) {
            EXPECT_EQ(g.degree(), 2);
            EXPECT_EQ(g.size(), 2u);
        }
    }
    EXPECT_THROW(rank_less_than(2, 3, 3), InvalidArgument);
}

TEST(Builders, Sphere) {
    NullHypothesis h = sphere(4, Q("1/16"));
    Polynomial expected(4);
    for (std::size_t i = 0; i < 4; ++i) expected += pow(Polynomial::variable(4, i) - Polynomial::constant(4, Q("1/4")), 2);
    expected -= Polynomial::constant(4, Q("1/16"));
    ASSERT_EQ(h.generators.size(), 1u);
    EXPECT_EQ(h.generators[0], expected);
    EXPECT_EQ(h.substituted_generators()[0], substitute_last(expected));
    EXPECT_THROW(sphere(4, Q("9/16")), InvalidArgument);
    EXPECT_THROW(sphere(4, 0), InvalidArgument);
}

TEST(Builders, SymmetryAndMotzkin) {
    NullHypothesis s = symmetry(3);
    EXPECT_EQ(s.generators.size(), 3u);
    EXPECT_EQ(s.generators[0], parse_poly("p12 - p21", s.variables));

    NullHypothesis m = motzkin();
    EXPECT_EQ(m.k, 4u);
    EXPECT_EQ(evaluate(m.generators[0], Qv({"1/4", "1/4", "1/4", "1/4"})), 0);
}

TEST(Builders, SpecDispatch) {
    HypothesisSpec spec;
    spec.kind = "independence";
    spec.p = 2;
    spec.q = 3;
    EXPECT_EQ(build_hypothesis(spec).generators.size(), 3u);
    spec.kind = "sphere";
    spec.k = 3;
    spec.delta = Q("1/6");
    EXPECT_EQ(build_hypothesis(spec).delta_sq, Q("1/36"));
    spec.kind = "nonsense";
    EXPECT_THROW(build_hypothesis(spec), InvalidArgument);
}

RationalMatrix square_a() { return {Qv({"-1", "0"}), Qv({"0", "-1"})}; }

TEST(PolytopeExistence, SquareLargeT) {
    ExistenceVerdict v = polytope_existence(square_a(), Qv({"-3/4", "-3/4"}), 3);
    ASSERT_TRUE(v.exists);
    EXPECT_EQ(*v.separating, -(P("p1 - 3/4", 2) * P("p2 - 3/4", 2)));
}

TEST(PolytopeExistence, SquareSmallT) {
    ExistenceVerdict v = polytope_existence(square_a(), Qv({"-1/4", "-1/4"}), 3);
    ASSERT_FALSE(v.exists);
    EXPECT_EQ(v.facet_i, 0u);
    EXPECT_EQ(v.facet_j, 1u);
    EXPECT_EQ(v.point, Qv({"1/4", "1/4"}));
}

TEST(PolytopeExistence, Ordering) {
    // p1 <= p2 <= p3 with p3 = 1 - p1 - p2.
    ExistenceVerdict v = polytope_existence({Qv({"-1", "1"}), Qv({"-1", "-2"})}, Qv({"0", "-1"}), 3);
    ASSERT_FALSE(v.exists);
    EXPECT_EQ(v.point, Qv({"1/3", "1/3"}));
}

TEST(PolytopeExistence, StableUnderPositiveRowScaling) {
    struct Case {
        RationalMatrix a;
        RationalVector b;
    };
    std::vector<Case> cases{{square_a(), Qv({"-3/4", "-3/4"})},
                            {square_a(), Qv({"-1/4", "-1/4"})},
                            {{Qv({"-1", "1"}), Qv({"-1", "-2"})}, Qv({"0", "-1"})}};
    for (const auto& c : cases) {
        ExistenceVerdict base = polytope_existence(c.a, c.b, 3);
        for (auto s : {Q("2"), Q("1/3"), Q("7/5")}) {
            RationalMatrix a = c.a;
            RationalVector b = c.b;
            a[0][0] *= s, a[0][1] *= s, b[0] *= s;
            ExistenceVerdict scaled = polytope_existence(a, b, 3);
            EXPECT_EQ(scaled.exists, base.exists);
            EXPECT_EQ(scaled.point, base.point);
        }
    }
}

TEST(PolytopeExistence, RejectsInvalidInputs) {
    // Empty: p1 >= 2/3 and p2 >= 2/3.
    EXPECT_THROW(polytope_existence({Qv({"1", "0"}), Qv({"0", "1"})}, Qv({"2/3", "2/3"}), 3), InvalidArgument);
    // Facet p1 >= -1 misses the simplex.
    EXPECT_THROW(polytope_existence({Qv({"1", "0"}), Qv({"-1", "0"})}, Qv({"-1", "-1/2"}), 3), InvalidArgument);
    // The second row duplicates the first.
    EXPECT_THROW(polytope_existence({Qv({"-1", "0"}), Qv({"-2", "0"})}, Qv({"-1/2", "-1"}), 3), InvalidArgument);
}

TEST(LogOdds, Examples) {
    EXPECT_EQ(log_odds_to_binomial(Qv({"1", "1"}), 1, 3), P("p1*p2 - p3^2", 3));
    EXPECT_EQ(log_odds_to_binomial(Qv({"1", "-1"}), 1, 3), P("p1 - p2", 3));
    EXPECT_EQ(log_odds_to_binomial(Qv({"1/2", "1"}), 1, 3), P("p1*p2^2 - p3^3", 3));
    EXPECT_THROW(log_odds_to_binomial(Qv({"0", "0"}), 1, 3), InvalidArgument);
}

TEST(LogOdds, DisjointSupportsAndPrimitiveExponents) {
    for (auto a : {Qv({"2", "4"}), Qv({"3/2", "-1/3"}), Qv({"-1", "-1"}), Qv({"1", "0", "-2"})}) {
        std::size_t k = a.size() + 1;
        for (auto c : {Q("1"), Q("4"), Q("2/9")}) {
            Polynomial b = log_odds_to_binomial(a, c, k);
            ASSERT_EQ(b.size(), 2u);
            const auto& i = b.terms()[0].exponents;
            const auto& j = b.terms()[1].exponents;
            Integer g = 0;
            for (std::size_t t = 0; t < k; ++t) {
                EXPECT_TRUE(i[t] == 0 || j[t] == 0);
                mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), i[t] + j[t]);
            }
            // A common exponent factor g survives only when c has no rational g-th root.
            if (g != 1) {
                Rational root;
                Rational coeff = -b.terms()[1].coefficient;
                EXPECT_FALSE(g == 2 && rational_sqrt(coeff, root)) << to_string(b);
            }
            if (c == 1 || c == 4) EXPECT_EQ(g, 1) << to_string(b);
        }
    }
}

TEST(Sampling, NullPointsPerFamily) {
    expect_null_points(independence(2, 2), 60, 1);
    expect_null_points(independence(2, 3), 60, 2);
    expect_null_points(rank_less_than(3, 3, 3), 60, 3);
    expect_null_points(rank_less_than(3, 4, 2), 60, 4);
    expect_null_points(sphere(3, Q("1/6")), 60, 5);
    expect_null_points(sphere(4, Q("1/16")), 60, 6);
    expect_null_points(symmetry(2), 60, 7);
    expect_null_points(symmetry(3), 60, 8);
    expect_null_points(motzkin(), 60, 9);
    expect_null_points(affine({Qv({"1", "1", "-1"})}, Qv({"0"})), 60, 10);
    expect_null_points(affine({Qv({"2", "1", "-1", "0"}), Qv({"0", "1", "0", "-1"})}, Qv({"0", "0"})), 60, 11);
    expect_null_points(log_odds(Qv({"1", "1"}), 1, 3), 60, 12);
    expect_null_points(log_odds(Qv({"1", "-2", "1"}), 4, 4), 60, 13);
    expect_null_points(polytope(square_a(), Qv({"-1/4", "-1/4"}), 3), 60, 14);
}

TEST(Sampling, Deterministic) {
    auto a = sample_null_points(independence(2, 2), 10, 3);
    auto b = sample_null_points(independence(2, 2), 10, 3);
    auto c = sample_null_points(independence(2, 2), 10, 4);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Sampling, SpecificParameterizations) {
    NullHypothesis h = independence(2, 2);
    // Outer product of (1/3, 2/3) and (1/5, 4/5).
    RationalVector s = Qv({"1/15", "4/15", "2/15", "8/15"});
    EXPECT_EQ(evaluate(h.generators[0], s), 0);
    RationalVector sym = Qv({"1/6", "1/3", "1/3", "1/6"});
    EXPECT_EQ(evaluate(symmetry(2).generators[0], sym), 0);
}

TEST(Sampling, SphereWithoutRationalPoints) {
    // 2(a^2 + ab + b^2) = 1/36 has no rational solution: 1/72 is not a norm from Q(sqrt(-3)).
    EXPECT_THROW(sample_null_points(sphere(3, Q("1/36")), 5, 1), InvalidArgument);
}

TEST(Sampling, CustomUnsupported) {
    NullHypothesis h = custom({P("p1 - p2", 3)});
    EXPECT_THROW(sample_null_points(h, 5, 1), InvalidArgument);
}

TEST(Sampling, SimplexPoints) {
    auto pts = sample_simplex_points(4, 50, 9);
    for (const auto& s : pts) {
        Rational total = 0;
        for (const auto& x : s) {
            EXPECT_GT(x, 0);
            total += x;
        }
        EXPECT_EQ(total, 1);
    }
    EXPECT_EQ(van_der_corput(1, 2), Q("1/2"));
    EXPECT_EQ(van_der_corput(3, 2), Q("3/4"));
}

}  // namespace
}  // namespace powerpoly
