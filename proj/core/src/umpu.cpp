#include "powerpoly/umpu.hpp"

#include <algorithm>
#include <map>

#include "powerpoly/linear_program.hpp"

namespace powerpoly {

std::string to_string(UMPUStatus s) {
    switch (s) {
        case UMPUStatus::Exists: return "Exists";
        case UMPUStatus::NotExists: return "NotExists";
        case UMPUStatus::Candidate: return "Candidate";
    }
    return "Candidate";
}

CoefficientPolytope coefficient_polytope(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k) {
    if (k == 0) k = f.nvars();
    if (alpha <= 0 || alpha >= 1) throw InvalidArgument("alpha must lie in (0, 1)");
    const int deg = f.degree();
    if (deg < 1) throw InvalidArgument("f must be nonconstant");
    if (static_cast<int>(n) < 2 * deg)
        throw InvalidArgument("sample size n = " + std::to_string(n) + " is below 2 deg(f) = " + std::to_string(2 * deg));

    CoefficientPolytope p;
    p.k = k;
    p.n = n;
    p.n_prime = n - 2 * static_cast<unsigned>(deg);
    p.alpha = alpha;
    p.f_tilde = to_simplex_form(f, static_cast<unsigned>(deg), k);
    const Polynomial sq = p.f_tilde * p.f_tilde;

    p.coordinates = compositions(p.n_prime, static_cast<unsigned>(k));
    std::sort(p.coordinates.begin(), p.coordinates.end(), [](const Exponents& a, const Exponents& b) {
        return compare(a, b, MonomialOrder::GradedRevLex) > 0;
    });
    for (const auto& l : compositions(n, static_cast<unsigned>(k))) {
        PolytopeRow row;
        row.multiindex = l;
        row.row.assign(p.coordinates.size(), 0);
        for (std::size_t j = 0; j < p.coordinates.size(); ++j)
            if (divides(p.coordinates[j], l)) row.row[j] = sq.coefficient(divide(l, p.coordinates[j]));
        Rational m = multinomial(l);
        row.lower = -m * alpha;
        row.upper = m * (1 - alpha);
        p.rows.push_back(std::move(row));
    }
    return p;
}

std::vector<Halfspace> CoefficientPolytope::halfspaces() const {
    std::vector<Halfspace> hs;
    for (const auto& r : rows) {
        hs.push_back({r.row, r.upper});
        RationalVector neg(r.row.size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -r.row[j];
        hs.push_back({std::move(neg), -r.lower});
    }
    return hs;
}

bool CoefficientPolytope::contains(const RationalVector& h) const {
    for (const auto& r : rows) {
        Rational v = dot(r.row, h);
        if (v < r.lower || v > r.upper) return false;
    }
    return true;
}

Polynomial CoefficientPolytope::h_polynomial(const RationalVector& h) const {
    if (h.size() != coordinates.size()) throw DimensionError("coefficient vector has the wrong length");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < h.size(); ++j) terms.push_back({coordinates[j], h[j]});
    return Polynomial(k, std::move(terms));
}

Polynomial CoefficientPolytope::power(const RationalVector& h) const {
    return f_tilde * f_tilde * h_polynomial(h) + pow(Polynomial::sum_of_variables(k), n) * alpha;
}

CoefficientPolytope enumerate_vertices(CoefficientPolytope p, StepBudget* budget) {
    p.vertices = enumerate_polytope_vertices(p.halfspaces(), p.dim(), budget);
    return p;
}

ComponentwiseMax componentwise_max(const std::vector<RationalVector>& vertices) {
    if (vertices.empty()) throw InvalidArgument("componentwise maximum of an empty vertex list");
    const std::size_t d = vertices.front().size();
    RationalVector best(d);
    for (std::size_t c = 0; c < d; ++c) {
        best[c] = vertices.front()[c];
        for (const auto& v : vertices) best[c] = std::max(best[c], v[c]);
    }
    ComponentwiseMax out;
    for (const auto& v : vertices)
        if (v == best) {
            out.maximum = v;
            return out;
        }
    // Coordinate maximizers cannot all be pairwise comparable, or the top one would be the maximum.
    std::vector<std::size_t> maximizers;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t c = 0; c < d; ++c)
            if (vertices[i][c] == best[c]) {
                maximizers.push_back(i);
                break;
            }
    for (std::size_t a = 0; a < maximizers.size(); ++a)
        for (std::size_t b = a + 1; b < maximizers.size(); ++b) {
            const auto& u = vertices[maximizers[a]];
            const auto& v = vertices[maximizers[b]];
            bool u_wins = false, v_wins = false;
            for (std::size_t c = 0; c < d; ++c) {
                u_wins |= u[c] > v[c];
                v_wins |= v[c] > u[c];
            }
            if (u_wins && v_wins) {
                out.first = maximizers[a];
                out.second = maximizers[b];
                return out;
            }
        }
    throw Error("componentwise_max: no incomparable pair found");  // unreachable
}

namespace {

// p is a vertex of conv(others + p) iff p is not a convex combination of the others.
bool is_vertex(const Exponents& p, const std::vector<Exponents>& others, StepBudget* budget) {
    if (others.empty()) return true;
    const std::size_t m = others.size();
    LinearProgram lp(m);
    lp.nonnegative.assign(m, true);
    lp.add(RationalVector(m, 1), Sense::Equal, 1);
    for (std::size_t c = 0; c < p.size(); ++c) {
        RationalVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = others[i][c];
        lp.add(std::move(row), Sense::Equal, p[c]);
    }
    return solve(lp, budget).status == LPStatus::Infeasible;
}

}  // namespace

PeelingLayers convex_peeling(std::size_t k, unsigned n_prime, StepBudget* budget) {
    if (k < 2) throw InvalidArgument("convex peeling needs k >= 2");
    PeelingLayers out;
    std::vector<Exponents> s = compositions(n_prime, static_cast<unsigned>(k));
    while (!s.empty()) {
        out.residuals.push_back(s);
        std::vector<Exponents> layer, rest;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<Exponents> others;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) others.push_back(s[j]);
            (is_vertex(s[i], others, budget) ? layer : rest).push_back(s[i]);
        }
        out.layers.push_back(std::move(layer));
        s = std::move(rest);
    }
    return out;
}

namespace {

LinearProgram polytope_program(const CoefficientPolytope& p) {
    LinearProgram lp(p.dim());
    for (const auto& r : p.rows) {
        if (std::all_of(r.row.begin(), r.row.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
        lp.add(r.row, Sense::LessEqual, r.upper);
        lp.add(r.row, Sense::GreaterEqual, r.lower);
    }
    return lp;
}

RationalVector unit_vector(std::size_t n, std::size_t i) {
    RationalVector v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

UMPUVerdict peeling_recursion(const CoefficientPolytope& p, StepBudget* budget) {
    std::map<Exponents, std::size_t> index;
    for (std::size_t j = 0; j < p.coordinates.size(); ++j) index[p.coordinates[j]] = j;
    const PeelingLayers peel = convex_peeling(p.k, p.n_prime, budget);
    const std::size_t d = p.dim();

    LinearProgram base = polytope_program(p);
    RationalVector h_star(d, 0);
    UMPUVerdict v;
    for (std::size_t layer = 0; layer < peel.layers.size(); ++layer) {
        std::vector<std::size_t> coords;
        for (const auto& e : peel.layers[layer]) coords.push_back(index.at(e));
        std::sort(coords.begin(), coords.end());
        std::vector<RationalVector> argmax(coords.size());
        RationalVector maxima(coords.size());
        for (std::size_t t = 0; t < coords.size(); ++t) {
            LinearProgram lp = base;
            lp.objective = unit_vector(d, coords[t]);
            LPResult r = solve(lp, budget);
            if (r.status != LPStatus::Optimal) throw Error("coefficient polytope LP failed");
            maxima[t] = r.value;
            argmax[t] = r.x;
        }
        LinearProgram joint = base;
        for (std::size_t t = 0; t < coords.size(); ++t) joint.add(unit_vector(d, coords[t]), Sense::Equal, maxima[t]);
        if (solve(joint, budget).status == LPStatus::Infeasible) {
            v.status = UMPUStatus::NotExists;
            v.failed_layer = layer;
            for (auto c : coords) v.layer_coordinates.push_back(p.coordinates[c]);
            auto project = [&](const RationalVector& x) {
                RationalVector out;
                for (auto c : coords) out.push_back(x[c]);
                return out;
            };
            // Find two layer coordinates whose maxima are not jointly attainable.
            for (std::size_t a = 0; a < coords.size() && v.witness_first.empty(); ++a)
                for (std::size_t b = 0; b < coords.size() && v.witness_first.empty(); ++b) {
                    if (a == b) continue;
                    LinearProgram pa = base;
                    pa.add(unit_vector(d, coords[a]), Sense::Equal, maxima[a]);
                    pa.objective = unit_vector(d, coords[b]);
                    LPResult ra = solve(pa, budget);
                    if (ra.value >= maxima[b]) continue;
                    LinearProgram pb = base;
                    pb.add(unit_vector(d, coords[b]), Sense::Equal, maxima[b]);
                    pb.objective = unit_vector(d, coords[a]);
                    LPResult rb = solve(pb, budget);
                    v.witness_first = project(ra.x);
                    v.witness_second = project(rb.x);
                }
            if (v.witness_first.empty()) {
                v.witness_first = project(argmax.front());
                v.witness_second = project(argmax.back());
                v.reason = "per-coordinate maxima of layer " + std::to_string(layer) +
                           " are pairwise attainable but not jointly";
            } else {
                v.reason = "layer " + std::to_string(layer) + " of the projected polytope has no componentwise maximum";
            }
            return v;
        }
        for (std::size_t t = 0; t < coords.size(); ++t) {
            h_star[coords[t]] = maxima[t];
            base.add(unit_vector(d, coords[t]), Sense::Equal, maxima[t]);
        }
    }
    v.status = UMPUStatus::Candidate;
    v.h_star = h_star;
    v.beta = make_power_polynomial(p.power(h_star), p.n, p.k);
    v.reason = "every peeling layer has a componentwise maximum; sufficiency is not decided";
    return v;
}

UMPUVerdict umpu_search(const Polynomial& f, unsigned n, const Rational& alpha, std::size_t k, StepBudget* budget,
                        const UMPUSearchOptions& options) {
    CoefficientPolytope p = coefficient_polytope(f, n, alpha, k);
    if (options.enumerate) {
        p = enumerate_vertices(std::move(p), budget);
        ComponentwiseMax cm = componentwise_max(*p.vertices);
        if (cm.maximum) {
            UMPUVerdict v;
            v.status = UMPUStatus::Exists;
            v.h_star = *cm.maximum;
            v.beta = make_power_polynomial(p.power(v.h_star), p.n, p.k);
            v.reason = "the coefficient polytope has a componentwise maximum vertex";
            v.vertex_count = p.vertices->size();
            v.vertices_enumerated = true;
            return v;
        }
    }
    UMPUVerdict v = peeling_recursion(p, budget);
    if (p.vertices) {
        v.vertex_count = p.vertices->size();
        v.vertices_enumerated = true;
    }
    return v;
}

}  // namespace powerpoly
