#pragma once

#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/polynomial.hpp"

namespace powerpoly {

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Full multivariate division: f = sum q_i g_i + r with no term of r divisible by any LT(g_i).
Division reduce(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder order,
                StepBudget* budget = nullptr);
Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder order,
                     StepBudget* budget = nullptr);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::GradedRevLex;
    // Monic, reduced, sorted by ascending leading monomial.
    std::vector<Polynomial> elements;

    std::size_t nvars() const { return elements.empty() ? 0 : elements.front().nvars(); }
    bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

GroebnerBasis buchberger_reduced(const std::vector<Polynomial>& gens, MonomialOrder order,
                                 StepBudget* budget = nullptr);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb, StepBudget* budget = nullptr);

// f vanishes on the complex variety of gens, decided by 1 in <gens, 1 - y f>.
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                        StepBudget* budget = nullptr);

}  // namespace powerpoly
