#pragma once

#include <cstddef>
#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

// a . x <= b
struct Halfspace {
    RationalVector a;
    Rational b;
};

// Vertices of the bounded polyhedron {x : a_i . x <= b_i} by the double description method
// over the integers. Output is deduplicated and sorted lexicographically.
std::vector<RationalVector> enumerate_polytope_vertices(const std::vector<Halfspace>& halfspaces, std::size_t dim,
                                                        StepBudget* budget = nullptr);

bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace powerpoly
