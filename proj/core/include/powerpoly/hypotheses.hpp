#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/polynomial.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

// p x q table flattened row-major: cell (i, j) is coordinate i*q + j.
struct ContingencyShape {
    std::size_t p = 0;
    std::size_t q = 0;

    std::size_t k() const { return p * q; }
    std::size_t index(std::size_t i, std::size_t j) const { return i * q + j; }
    std::vector<std::string> variable_names() const;  // p11, p12, ...
};

enum class HypothesisKind { Independence, RankLessThan, Sphere, Symmetry, Motzkin, Affine, Polytope, LogOdds, Custom };

std::string to_string(HypothesisKind kind);

struct NullHypothesis {
    HypothesisKind kind = HypothesisKind::Custom;
    std::size_t k = 0;
    // Algebraic description in all k coordinates; the null set is their common zero set on the simplex.
    // Empty for polytope hypotheses.
    std::vector<Polynomial> generators;
    std::vector<std::string> variables;

    std::optional<ContingencyShape> shape;
    std::size_t rank = 0;             // rank_lt: tables of rank < rank
    Rational delta_sq;                // sphere
    RationalMatrix matrix;            // affine C (k columns) or polytope A (k-1 columns)
    RationalVector vector;            // affine d or polytope b
    RationalVector log_odds;          // logodds a (k-1 entries)
    Rational odds_target;             // logodds c

    // Generators with the last coordinate replaced by 1 - sum of the others.
    std::vector<Polynomial> substituted_generators() const;
    // Sum of squared generators in k coordinates; vanishes exactly on the null set.
    Polynomial sos_witness() const;
};

struct HypothesisSpec {
    std::string kind;
    std::size_t p = 0, q = 0, r = 0, k = 0;
    std::optional<Rational> delta;
    std::optional<Rational> delta_sq;
    RationalMatrix matrix;
    RationalVector vector;
    RationalVector a;
    std::optional<Rational> c;
    std::vector<std::string> generators;
    std::vector<std::string> variables;
};

NullHypothesis build_hypothesis(const HypothesisSpec& spec);

NullHypothesis independence(std::size_t p, std::size_t q);
NullHypothesis rank_less_than(std::size_t p, std::size_t q, std::size_t r);
NullHypothesis sphere(std::size_t k, const Rational& delta_sq);
NullHypothesis symmetry(std::size_t p);
NullHypothesis motzkin();
NullHypothesis affine(const RationalMatrix& c, const RationalVector& d);
NullHypothesis polytope(const RationalMatrix& a, const RationalVector& b, std::size_t k);
NullHypothesis log_odds(const RationalVector& a, const Rational& c, std::size_t k);
NullHypothesis custom(const std::vector<Polynomial>& generators, std::vector<std::string> variables = {});

// All r x r minors of the p x q matrix of table variables, in lexicographic (rows, cols) order.
std::vector<Polynomial> table_minors(const ContingencyShape& shape, std::size_t r);

struct ExistenceVerdict {
    bool exists = false;
    // exists: -prod(a_i . pi - b_i) in the first k-1 coordinates.
    std::optional<Polynomial> separating;
    // not exists: facets i < j meeting inside the open simplex at `point`.
    std::size_t facet_i = 0, facet_j = 0;
    RationalVector point;
};

// P0 = {pi in projected simplex : A pi >= b}, A with k-1 columns.
ExistenceVerdict polytope_existence(const RationalMatrix& a, const RationalVector& b, std::size_t k,
                                    StepBudget* budget = nullptr);

// Sum a_i log(pi_i / pi_k) = log c, cleared to a binomial pi^I - c' pi^J in k variables.
Polynomial log_odds_to_binomial(const RationalVector& a, const Rational& c, std::size_t k);

// Exact rational points of the null set (all k coordinates, summing to 1).
std::vector<RationalVector> sample_null_points(const NullHypothesis& h, std::size_t count, std::uint64_t seed);

// Rational points of the simplex from the same low-discrepancy sequence.
std::vector<RationalVector> sample_simplex_points(std::size_t k, std::size_t count, std::uint64_t seed,
                                                  bool interior = true);

// n-th van der Corput value in the given base, a rational in (0,1) for n >= 1.
Rational van_der_corput(std::uint64_t n, unsigned base);

}  // namespace powerpoly
