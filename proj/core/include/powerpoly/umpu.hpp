#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/polynomial.hpp"
#include "powerpoly/power.hpp"
#include "powerpoly/vertex_enumeration.hpp"

namespace powerpoly {

struct PolytopeRow {
    Exponents multiindex;  // L, of total degree n
    RationalVector row;    // coefficient of h_J is (f~^2)_{L-J}
    Rational lower;        // -multinomial(n, L) alpha
    Rational upper;        // multinomial(n, L) (1 - alpha)
};

// Coefficients h of degree n' = n - 2 deg f polynomials with f~^2 h + alpha (sum pi)^n a power polynomial.
struct CoefficientPolytope {
    std::size_t k = 0;
    unsigned n = 0;
    unsigned n_prime = 0;
    Rational alpha;
    Polynomial f_tilde;
    std::vector<Exponents> coordinates;  // monomials of h, descending graded reverse lex
    std::vector<PolytopeRow> rows;
    std::optional<std::vector<RationalVector>> vertices;

    std::size_t dim() const { return coordinates.size(); }
    std::size_t halfspace_count() const { return 2 * rows.size(); }
    std::vector<Halfspace> halfspaces() const;
    bool contains(const RationalVector& h) const;
    Polynomial h_polynomial(const RationalVector& h) const;
    // f~^2 h + alpha (sum pi)^n
    Polynomial power(const RationalVector& h) const;
};

CoefficientPolytope coefficient_polytope(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k = 0);

CoefficientPolytope enumerate_vertices(CoefficientPolytope p, StepBudget* budget = nullptr);

struct ComponentwiseMax {
    std::optional<RationalVector> maximum;
    // Without a maximum: vertices[first] and vertices[second] each exceed the other in some coordinate.
    std::size_t first = 0;
    std::size_t second = 0;
};

ComponentwiseMax componentwise_max(const std::vector<RationalVector>& vertices);

struct PeelingLayers {
    std::vector<std::vector<Exponents>> layers;
    std::vector<std::vector<Exponents>> residuals;  // S^(i), the points still present before layer i
};

PeelingLayers convex_peeling(std::size_t k, unsigned n_prime, StepBudget* budget = nullptr);

enum class UMPUStatus { Exists, NotExists, Candidate };
std::string to_string(UMPUStatus s);

struct UMPUVerdict {
    UMPUStatus status = UMPUStatus::Candidate;
    RationalVector h_star;
    std::optional<PowerPolynomial> beta;
    std::string reason;
    // NotExists certificate: layer index, coordinates, and two projected points neither dominating.
    std::size_t failed_layer = 0;
    std::vector<Exponents> layer_coordinates;
    RationalVector witness_first;
    RationalVector witness_second;
    std::size_t vertex_count = 0;
    bool vertices_enumerated = false;
};

// Layer-by-layer coordinate maximization along the convex peeling.
UMPUVerdict peeling_recursion(const CoefficientPolytope& p, StepBudget* budget = nullptr);

struct UMPUSearchOptions {
    bool enumerate = true;  // try the full vertex set first
};

UMPUVerdict umpu_search(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k = 0,
                        StepBudget* budget = nullptr, const UMPUSearchOptions& options = {});

}  // namespace powerpoly
