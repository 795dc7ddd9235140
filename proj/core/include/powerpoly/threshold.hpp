#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powerpoly/errors.hpp"
#include "powerpoly/groebner.hpp"
#include "powerpoly/hypotheses.hpp"
#include "powerpoly/polynomial.hpp"
#include "powerpoly/power.hpp"

namespace powerpoly {

enum class Exactness { ExactUnderTheorem, SOSUpperBoundOnly };
std::string to_string(Exactness e);

struct ThresholdReport {
    int ntub_bound = 0;
    int sub_bound = 0;
    int cut_out_degree = 0;
    Polynomial ntub_witness;
    Polynomial sub_witness;
    // sub_witness = sum_i sub_weights[i] * sub_generators[i]^2, a diagonal Gram form.
    std::vector<Polynomial> sub_generators;
    std::vector<Rational> sub_weights;
    Exactness exactness = Exactness::SOSUpperBoundOnly;
    std::string justification;
    std::vector<int> basis_degrees;
    // Indices (into the basis) of elements above the cut-out degree, certified in the radical of G_d.
    std::vector<std::size_t> redundant;
    std::vector<std::string> notes;
};

struct SosOptions {
    // Positive weights c_i for sum c_i g_i^2 over G_d; empty means all 1.
    std::vector<Rational> weights;
    // Caller asserts the gradient of a principal generator is nonzero on the null set.
    bool assert_regular = false;
    std::size_t gradient_samples = 20;
    std::uint64_t seed = 1;
};

// gb is the reduced basis of the hypothesis in the first k-1 coordinates (last one substituted).
ThresholdReport sos_bounds(const GroebnerBasis& gb, const NullHypothesis& h, const SosOptions& options = {},
                           StepBudget* budget = nullptr);

// Reduced basis of the substituted generators of h.
GroebnerBasis hypothesis_basis(const NullHypothesis& h, MonomialOrder order = MonomialOrder::GradedRevLex,
                               StepBudget* budget = nullptr);

enum class UMPUForm { PrincipalSquare, SemialgebraicLinear };
std::string to_string(UMPUForm form);

struct UMPUPower {
    Rational alpha;
    Rational c_alpha;
    PowerPolynomial beta;
    UMPUForm form = UMPUForm::PrincipalSquare;
    Polynomial f_tilde;  // homogenized f in k variables
};

// beta = c f~^2 (sum pi)^(n - 2 deg f) + alpha (sum pi)^n with the largest c keeping box constraints.
// f may be given in k variables or in the first k-1; k defaults to f.nvars().
UMPUPower principal_umpu(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k = 0);
// Same with f~ instead of f~^2, for P0 = {f <= 0}.
UMPUPower semialgebraic_umpu(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k = 0);

enum class UnionKind { NTUB, SUB };

// Product of component separating polynomials.
Polynomial union_separating(const std::vector<Polynomial>& witnesses, UnionKind kind);
// Threshold 2 * sum of degrees of irreducible component generators.
int union_threshold(const std::vector<Polynomial>& generators);

ThresholdReport rank_threshold(std::size_t p, std::size_t q, std::size_t r);

}  // namespace powerpoly
