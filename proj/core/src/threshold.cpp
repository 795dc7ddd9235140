#include "powerpoly/threshold.hpp"

#include <algorithm>

namespace powerpoly {

std::string to_string(Exactness e) {
    return e == Exactness::ExactUnderTheorem ? "ExactUnderTheorem" : "SOSUpperBoundOnly";
}

std::string to_string(UMPUForm form) {
    return form == UMPUForm::PrincipalSquare ? "PrincipalSquare" : "SemialgebraicLinear";
}

GroebnerBasis hypothesis_basis(const NullHypothesis& h, MonomialOrder order, StepBudget* budget) {
    auto gens = h.substituted_generators();
    if (gens.empty()) throw InvalidArgument("hypothesis has no algebraic generators");
    return buchberger_reduced(gens, order, budget);
}

namespace {

RationalVector drop_last(const RationalVector& v) { return RationalVector(v.begin(), v.end() - 1); }

// Gradient of g (in k-1 coordinates) is nonzero at every sampled null point.
bool gradient_nonvanishing(const Polynomial& g, const NullHypothesis& h, std::size_t samples, std::uint64_t seed,
                           std::string& note) {
    std::vector<RationalVector> pts;
    try {
        pts = sample_null_points(h, samples, seed);
    } catch (const Error& e) {
        note = std::string("gradient check skipped: ") + e.what();
        return false;
    }
    for (const auto& pt : pts) {
        RationalVector x = drop_last(pt);
        bool nonzero = false;
        for (std::size_t v = 0; v < g.nvars() && !nonzero; ++v) nonzero = evaluate(derivative(g, v), x) != 0;
        if (!nonzero) {
            note = "gradient vanishes at a sampled null point " + to_string(pt);
            return false;
        }
    }
    note = "gradient nonzero at " + std::to_string(pts.size()) + " sampled null points (evidence, not proof)";
    return true;
}

}  // namespace

ThresholdReport sos_bounds(const GroebnerBasis& gb, const NullHypothesis& h, const SosOptions& options,
                           StepBudget* budget) {
    if (gb.elements.empty()) throw InvalidArgument("empty Groebner basis");
    if (gb.is_unit()) throw InvalidArgument("Groebner basis is {1}: the null set is empty");
    ThresholdReport r;
    const auto& g = gb.elements;
    for (const auto& e : g) r.basis_degrees.push_back(e.degree());
    const int dmin = *std::min_element(r.basis_degrees.begin(), r.basis_degrees.end());
    const int dmax = *std::max_element(r.basis_degrees.begin(), r.basis_degrees.end());

    std::size_t imin = 0;
    while (r.basis_degrees[imin] != dmin) ++imin;
    r.ntub_bound = 2 * dmin;
    r.ntub_witness = g[imin] * g[imin];

    // Smallest degree i at which every higher-degree element lies in the radical of G_i.
    int d = dmax;
    for (int i = dmin; i < dmax; ++i) {
        std::vector<Polynomial> low;
        std::vector<std::size_t> high;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (r.basis_degrees[j] <= i)
                low.push_back(g[j]);
            else
                high.push_back(j);
        }
        bool all = true;
        for (auto j : high)
            if (!radical_membership(g[j], low, budget)) {
                all = false;
                break;
            }
        if (all) {
            d = i;
            r.redundant = high;
            break;
        }
    }
    r.cut_out_degree = d;
    r.sub_bound = 2 * d;

    std::vector<std::size_t> gd;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (r.basis_degrees[j] <= d) gd.push_back(j);
    if (!options.weights.empty() && options.weights.size() != gd.size())
        throw InvalidArgument("expected " + std::to_string(gd.size()) + " weights, one per basis element of degree <= " +
                              std::to_string(d));
    r.sub_witness = Polynomial(g.front().nvars(), gb.order);
    for (std::size_t t = 0; t < gd.size(); ++t) {
        Rational w = options.weights.empty() ? Rational(1) : options.weights[t];
        if (w <= 0) throw InvalidArgument("SOS weights must be positive");
        r.sub_generators.push_back(g[gd[t]]);
        r.sub_weights.push_back(w);
        r.sub_witness += g[gd[t]] * g[gd[t]] * w;
    }
    if (d > dmin)
        r.notes.push_back("cut-out degree certified by complex radical membership; it may overestimate the "
                          "degree needed on the simplex");

    if (h.kind == HypothesisKind::RankLessThan || h.kind == HypothesisKind::Independence) {
        r.exactness = Exactness::ExactUnderTheorem;
        r.justification = "bounded-rank tables: thresholds equal 2r";
    } else if (g.size() == 1) {
        std::string note;
        bool regular = options.assert_regular ||
                       gradient_nonvanishing(g.front(), h, options.gradient_samples, options.seed, note);
        if (options.assert_regular) note = "nonvanishing gradient asserted by caller";
        r.notes.push_back(note);
        if (regular) {
            r.exactness = Exactness::ExactUnderTheorem;
            r.justification = "principal ideal with nonvanishing gradient on the null set";
        } else {
            r.justification = "principal ideal, gradient condition not established";
        }
    } else if (dmin == dmax) {
        r.exactness = Exactness::ExactUnderTheorem;
        r.justification = "all basis elements have equal degree";
    } else {
        r.justification = "no lower-bound theorem applies; bounds come from the SOS construction";
    }
    return r;
}

namespace {

UMPUPower maximal_scaling(const Polynomial& shape, unsigned n, const Rational& alpha, std::size_t k, UMPUForm form,
                          const Polynomial& f_tilde) {
    if (alpha <= 0 || alpha >= 1) throw InvalidArgument("alpha must lie in (0, 1)");
    Rational c = -1;
    for (const auto& t : shape.terms()) {
        Rational m = multinomial(t.exponents);
        Rational bound = t.coefficient > 0 ? Rational((1 - alpha) * m / t.coefficient) : Rational(alpha * m / -t.coefficient);
        if (c < 0 || bound < c) c = bound;
    }
    if (c < 0) throw InvalidArgument("polynomial vanishes identically on the simplex");
    UMPUPower u;
    u.alpha = alpha;
    u.c_alpha = c;
    u.form = form;
    u.f_tilde = f_tilde;
    Polynomial beta = shape * c + pow(Polynomial::sum_of_variables(k), n) * alpha;
    u.beta = make_power_polynomial(beta, n, k);
    return u;
}

}  // namespace

UMPUPower principal_umpu(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k) {
    if (k == 0) k = f.nvars();
    const int deg = f.degree();
    if (deg < 1) throw InvalidArgument("f must be nonconstant");
    if (static_cast<int>(n) < 2 * deg)
        throw InvalidArgument("sample size n = " + std::to_string(n) + " is below 2 deg(f) = " + std::to_string(2 * deg));
    Polynomial ft = to_simplex_form(f, static_cast<unsigned>(deg), k);
    Polynomial shape = ft * ft * pow(Polynomial::sum_of_variables(k), n - 2 * static_cast<unsigned>(deg));
    return maximal_scaling(shape, n, alpha, k, UMPUForm::PrincipalSquare, ft);
}

UMPUPower semialgebraic_umpu(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k) {
    if (k == 0) k = f.nvars();
    const int deg = f.degree();
    if (deg < 1) throw InvalidArgument("f must be nonconstant");
    if (static_cast<int>(n) < deg)
        throw InvalidArgument("sample size n = " + std::to_string(n) + " is below deg(f) = " + std::to_string(deg));
    Polynomial ft = to_simplex_form(f, static_cast<unsigned>(deg), k);
    Polynomial shape = ft * pow(Polynomial::sum_of_variables(k), n - static_cast<unsigned>(deg));
    return maximal_scaling(shape, n, alpha, k, UMPUForm::SemialgebraicLinear, ft);
}

Polynomial union_separating(const std::vector<Polynomial>& witnesses, UnionKind kind) {
    (void)kind;  // both constructions are the product of the component witnesses
    if (witnesses.empty()) throw InvalidArgument("union of zero hypotheses");
    Polynomial p = witnesses.front();
    for (std::size_t i = 1; i < witnesses.size(); ++i) p *= witnesses[i];
    return p;
}

int union_threshold(const std::vector<Polynomial>& generators) {
    if (generators.empty()) throw InvalidArgument("union of zero hypotheses");
    int total = 0;
    for (const auto& g : generators) total += g.degree();
    return 2 * total;
}

ThresholdReport rank_threshold(std::size_t p, std::size_t q, std::size_t r) {
    NullHypothesis h = rank_less_than(p, q, r);
    ThresholdReport rep;
    rep.ntub_bound = rep.sub_bound = static_cast<int>(2 * r);
    rep.cut_out_degree = static_cast<int>(r);
    rep.sub_witness = Polynomial(h.k);
    for (const auto& m : h.generators) {
        rep.sub_generators.push_back(m);
        rep.sub_weights.push_back(1);
        rep.sub_witness += m * m;
        rep.basis_degrees.push_back(m.degree());
    }
    rep.ntub_witness = rep.sub_witness;
    rep.exactness = Exactness::ExactUnderTheorem;
    rep.justification = "bounded-rank tables: thresholds equal 2r";
    return rep;
}

}  // namespace powerpoly
