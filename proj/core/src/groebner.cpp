#include "powerpoly/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace powerpoly {

namespace {

void check_dims(const Polynomial& f, const std::vector<Polynomial>& basis) {
    for (const auto& g : basis) {
        if (g.nvars() != f.nvars()) throw DimensionError("basis element has a different number of variables");
        if (g.is_zero()) throw InvalidArgument("basis contains the zero polynomial");
    }
}

Division divide_impl(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder order,
                     bool want_quotients, StepBudget* budget) {
    check_dims(f, basis);
    std::vector<Polynomial> g;
    g.reserve(basis.size());
    for (const auto& b : basis) g.push_back(b.with_order(order));
    Division out;
    if (want_quotients) out.quotients.assign(g.size(), Polynomial(f.nvars(), order));
    Polynomial p = f.with_order(order);
    std::vector<Term> rem;
    while (!p.is_zero()) {
        tick(budget, "polynomial division");
        const Term lt = p.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!divides(g[i].leading_monomial(), lt.exponents)) continue;
            Exponents shift = divide(lt.exponents, g[i].leading_monomial());
            Rational c = lt.coefficient / g[i].leading_coefficient();
            p.subtract_scaled(g[i], c, shift);
            if (want_quotients) out.quotients[i] += Polynomial::monomial(shift, c, order);
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            p -= Polynomial::monomial(lt.exponents, lt.coefficient, order);
        }
    }
    out.remainder = Polynomial(f.nvars(), std::move(rem), order);
    return out;
}

struct Pair {
    std::size_t i, j;
    Exponents lcm;
};

}  // namespace

Division reduce(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder order,
                StepBudget* budget) {
    return divide_impl(f, basis, order, true, budget);
}

Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& basis, MonomialOrder order,
                     StepBudget* budget) {
    return divide_impl(f, basis, order, false, budget).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != g.nvars()) throw DimensionError("s_polynomial dimension mismatch");
    const MonomialOrder order = f.order();
    Polynomial gg = g.with_order(order);
    Exponents l = lcm(f.leading_monomial(), gg.leading_monomial());
    Polynomial a = Polynomial::monomial(divide(l, f.leading_monomial()), 1 / Rational(f.leading_coefficient()), order) * f;
    Polynomial b =
        Polynomial::monomial(divide(l, gg.leading_monomial()), 1 / Rational(gg.leading_coefficient()), order) * gg;
    return a - b;
}

GroebnerBasis buchberger_reduced(const std::vector<Polynomial>& gens, MonomialOrder order, StepBudget* budget) {
    std::vector<Polynomial> g;
    for (const auto& p : gens) {
        if (!g.empty() && p.nvars() != g.front().nvars())
            throw DimensionError("generators have different numbers of variables");
        if (!p.is_zero()) g.push_back(p.with_order(order).monic());
    }
    if (g.empty()) throw InvalidArgument("Groebner basis of the zero ideal requested");

    // Normal strategy: smallest lcm first; ties broken by pair indices for determinism.
    auto pair_less = [order](const Pair& a, const Pair& b) {
        int c = compare(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::vector<Pair> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(g[i].leading_monomial(), g[j].leading_monomial())});

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *best;
        pairs.erase(best);
        tick(budget, "Buchberger S-pair");
        if (coprime(g[pr.i].leading_monomial(), g[pr.j].leading_monomial())) continue;
        Polynomial r = remainder(s_polynomial(g[pr.i], g[pr.j]), g, order, budget);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        std::size_t n = g.size() - 1;
        if (g[n].is_constant()) {
            return {order, {Polynomial::constant(g[n].nvars(), 1, order)}};
        }
        for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, n, lcm(g[i].leading_monomial(), g[n].leading_monomial())});
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
            // Equal leading monomials: keep the earliest.
            redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Interreduce.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].leading_monomial(), 1, order);
        minimal[i] = Polynomial::monomial(minimal[i].leading_monomial(), 1, order) +
                     (others.empty() ? tail : remainder(tail, others, order, budget));
    }
    std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    return {order, std::move(minimal)};
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb, StepBudget* budget) {
    if (f.is_zero()) return true;
    if (gb.elements.empty()) return false;
    return remainder(f, gb.elements, gb.order, budget).is_zero();
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, StepBudget* budget) {
    if (gens.empty()) throw InvalidArgument("radical membership needs at least one generator");
    if (f.is_zero()) return true;
    const MonomialOrder order = MonomialOrder::GradedRevLex;
    const std::size_t n = f.nvars();
    std::vector<Polynomial> ext;
    for (const auto& g : gens) {
        if (g.nvars() != n) throw DimensionError("generator dimension mismatch");
        ext.push_back(extend_variables(g, 1).with_order(order));
    }
    Polynomial y = Polynomial::variable(n + 1, n, order);
    ext.push_back(Polynomial::constant(n + 1, 1, order) - y * extend_variables(f, 1).with_order(order));
    return buchberger_reduced(ext, order, budget).is_unit();
}

}  // namespace powerpoly
