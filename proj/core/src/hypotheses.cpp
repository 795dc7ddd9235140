#include "powerpoly/hypotheses.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "powerpoly/linear_program.hpp"
#include "powerpoly/vertex_enumeration.hpp"

namespace powerpoly {

namespace {

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139};
constexpr std::size_t kPrimeCount = sizeof(kPrimes) / sizeof(kPrimes[0]);

// Streams of the low-discrepancy sequence; dimension d of draw i.
class Halton {
public:
    explicit Halton(std::uint64_t seed) : offset_(seed * 7919u + 1u) {}
    Rational at(std::uint64_t i, std::size_t d) const {
        return van_der_corput(offset_ + i + (d / kPrimeCount) * 104729u, kPrimes[d % kPrimeCount]);
    }

private:
    std::uint64_t offset_;
};

Rational rpow(const Rational& x, long e) {
    Rational base = e < 0 ? Rational(1 / x) : x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    r.canonicalize();
    return r;
}

bool rational_root(const Rational& x, unsigned long g, Rational& root) {
    if (g == 1) {
        root = x;
        return true;
    }
    if (x < 0) return false;
    Integer a, b;
    if (!mpz_root(a.get_mpz_t(), x.get_num_mpz_t(), g)) return false;
    if (!mpz_root(b.get_mpz_t(), x.get_den_mpz_t(), g)) return false;
    root = Rational(a, b);
    root.canonicalize();
    return true;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial det(m[0][0].nvars(), m[0][0].order());
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

void combinations(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, r, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> choose(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    combinations(n, r, 0, cur, out);
    return out;
}

Polynomial linear_form(const RationalVector& a, const Rational& b) {
    Polynomial p = Polynomial::constant(a.size(), -b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) p += Polynomial::variable(a.size(), i) * a[i];
    return p;
}

// Normalize positive weights to a point of the simplex.
RationalVector normalize(RationalVector v) {
    Rational s = std::accumulate(v.begin(), v.end(), Rational(0));
    for (auto& x : v) x /= s;
    return v;
}

RationalVector unit(std::size_t n, std::size_t i, const Rational& value = 1) {
    RationalVector v(n, 0);
    v[i] = value;
    return v;
}

// Basic optimal solutions of LPs over {pi >= 0, sum = 1, extra}; these are vertices.
std::vector<RationalVector> lp_vertices(std::size_t k, const std::vector<LinearConstraint>& extra) {
    std::vector<RationalVector> verts;
    for (std::size_t i = 0; i < k; ++i) {
        for (int dir : {1, -1}) {
            LinearProgram lp(k);
            lp.nonnegative.assign(k, true);
            lp.add(RationalVector(k, 1), Sense::Equal, 1);
            for (const auto& c : extra) lp.constraints.push_back(c);
            lp.objective = unit(k, i, dir);
            // Tiny tie-breaking perturbation keeps the maximizer a vertex that differs per direction.
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) lp.objective[j] = ratio(dir * static_cast<long>(j + 1), 1000 * static_cast<long>(k));
            LPResult r = solve(lp);
            if (r.status == LPStatus::Infeasible) throw InvalidArgument("null hypothesis set is empty on the simplex");
            verts.push_back(r.x);
        }
    }
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

std::vector<RationalVector> mixtures(const std::vector<RationalVector>& verts, std::size_t count, const Halton& h) {
    std::vector<RationalVector> out;
    for (std::size_t s = 0; s < count; ++s) {
        RationalVector w(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) w[i] = h.at(s, i);
        w = normalize(w);
        RationalVector x(verts.front().size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += w[i] * verts[i][j];
        out.push_back(std::move(x));
    }
    return out;
}

// Integer m with sum 0 and sum of squares target, entries bounded by sqrt(target).
bool find_lattice_point(std::size_t k, long target, std::vector<long>& m) {
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= target) ++bound;
    m.assign(k, 0);
    std::function<bool(std::size_t, long, long)> rec = [&](std::size_t i, long sum, long sq) -> bool {
        if (i + 1 == k) {
            long last = -sum;
            if (sq + last * last == target) {
                m[i] = last;
                return true;
            }
            return false;
        }
        for (long v = -bound; v <= bound; ++v) {
            if (sq + v * v > target) continue;
            m[i] = v;
            if (rec(i + 1, sum + v, sq + v * v)) return true;
        }
        return false;
    };
    return rec(0, 0, 0);
}

}  // namespace

Rational van_der_corput(std::uint64_t n, unsigned base) {
    Integer num = 0;
    Integer den = 1;
    while (n > 0) {
        num = num * base + static_cast<unsigned long>(n % base);
        den *= base;
        n /= base;
    }
    // The lowest digit of n ends up as the leading digit of the fraction.
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::vector<std::string> ContingencyShape::variable_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            if (p < 10 && q < 10)
                names.push_back("p" + std::to_string(i + 1) + std::to_string(j + 1));
            else
                names.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    return names;
}

std::string to_string(HypothesisKind kind) {
    switch (kind) {
        case HypothesisKind::Independence: return "independence";
        case HypothesisKind::RankLessThan: return "rank_lt";
        case HypothesisKind::Sphere: return "sphere";
        case HypothesisKind::Symmetry: return "symmetry";
        case HypothesisKind::Motzkin: return "motzkin";
        case HypothesisKind::Affine: return "affine";
        case HypothesisKind::Polytope: return "polytope";
        case HypothesisKind::LogOdds: return "logodds";
        case HypothesisKind::Custom: return "custom";
    }
    return "custom";
}

std::vector<Polynomial> NullHypothesis::substituted_generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : generators) {
        Polynomial s = substitute_last(g);
        if (!s.is_zero()) out.push_back(std::move(s));
    }
    return out;
}

Polynomial NullHypothesis::sos_witness() const {
    if (generators.empty()) throw InvalidArgument(to_string(kind) + " hypothesis has no algebraic generators");
    Polynomial w(k);
    for (const auto& g : generators) w += g * g;
    return w;
}

std::vector<Polynomial> table_minors(const ContingencyShape& shape, std::size_t r) {
    std::vector<Polynomial> out;
    for (const auto& rows : choose(shape.p, r))
        for (const auto& cols : choose(shape.q, r)) {
            std::vector<std::vector<Polynomial>> m;
            for (auto i : rows) {
                std::vector<Polynomial> row;
                for (auto j : cols) row.push_back(Polynomial::variable(shape.k(), shape.index(i, j)));
                m.push_back(std::move(row));
            }
            out.push_back(determinant(m));
        }
    return out;
}

NullHypothesis independence(std::size_t p, std::size_t q) {
    if (p < 2 || q < 2) throw InvalidArgument("independence needs a table with at least 2 rows and 2 columns");
    NullHypothesis h = rank_less_than(p, q, 2);
    h.kind = HypothesisKind::Independence;
    return h;
}

NullHypothesis rank_less_than(std::size_t p, std::size_t q, std::size_t r) {
    if (p < 2 || q < 2) throw InvalidArgument("rank hypothesis needs p, q >= 2");
    if (r < 2 || r > std::min(p, q)) throw InvalidArgument("rank bound r must satisfy 2 <= r <= min(p, q)");
    NullHypothesis h;
    h.kind = HypothesisKind::RankLessThan;
    h.shape = ContingencyShape{p, q};
    h.k = p * q;
    h.rank = r;
    h.generators = table_minors(*h.shape, r);
    h.variables = h.shape->variable_names();
    return h;
}

NullHypothesis sphere(std::size_t k, const Rational& delta_sq) {
    if (k < 3) throw InvalidArgument("sphere hypothesis needs k >= 3");
    Rational max_delta = 1 - Rational(1, static_cast<long>(k));
    if (delta_sq <= 0 || delta_sq >= max_delta * max_delta)
        throw InvalidArgument("sphere radius must satisfy 0 < delta < 1 - 1/k");
    NullHypothesis h;
    h.kind = HypothesisKind::Sphere;
    h.k = k;
    h.delta_sq = delta_sq;
    Polynomial f = Polynomial::constant(k, -delta_sq);
    Rational center(1, static_cast<long>(k));
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial d = Polynomial::variable(k, i) - Polynomial::constant(k, center);
        f += d * d;
    }
    h.generators = {f};
    h.variables = default_variable_names(k);
    return h;
}

NullHypothesis symmetry(std::size_t p) {
    if (p < 2) throw InvalidArgument("symmetry hypothesis needs p >= 2");
    NullHypothesis h;
    h.kind = HypothesisKind::Symmetry;
    h.shape = ContingencyShape{p, p};
    h.k = p * p;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            h.generators.push_back(Polynomial::variable(h.k, h.shape->index(i, j)) -
                                   Polynomial::variable(h.k, h.shape->index(j, i)));
    h.variables = h.shape->variable_names();
    return h;
}

NullHypothesis motzkin() {
    NullHypothesis h;
    h.kind = HypothesisKind::Motzkin;
    h.k = 4;
    h.variables = default_variable_names(4);
    h.generators = {parse_poly("p3^6 + p1^2*p2^4 + p1^4*p2^2 - 3*p1^2*p2^2*p3^2", h.variables)};
    return h;
}

NullHypothesis affine(const RationalMatrix& c, const RationalVector& d) {
    if (c.empty() || c.size() != d.size()) throw InvalidArgument("affine hypothesis needs matching C rows and d");
    const std::size_t k = c.front().size();
    if (k < 2) throw InvalidArgument("affine hypothesis needs k >= 2");
    NullHypothesis h;
    h.kind = HypothesisKind::Affine;
    h.k = k;
    h.matrix = c;
    h.vector = d;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].size() != k) throw DimensionError("affine rows have different lengths");
        Polynomial g = linear_form(c[i], d[i]);
        if (g.is_constant()) throw InvalidArgument("affine row " + std::to_string(i) + " is constant");
        h.generators.push_back(g);
    }
    h.variables = default_variable_names(k);
    return h;
}

NullHypothesis polytope(const RationalMatrix& a, const RationalVector& b, std::size_t k) {
    if (k < 2) throw InvalidArgument("polytope hypothesis needs k >= 2");
    if (a.empty() || a.size() != b.size()) throw InvalidArgument("polytope hypothesis needs matching A rows and b");
    for (const auto& row : a)
        if (row.size() != k - 1) throw DimensionError("polytope rows must have k-1 entries");
    NullHypothesis h;
    h.kind = HypothesisKind::Polytope;
    h.k = k;
    h.matrix = a;
    h.vector = b;
    h.variables = default_variable_names(k);
    return h;
}

NullHypothesis log_odds(const RationalVector& a, const Rational& c, std::size_t k) {
    NullHypothesis h;
    h.kind = HypothesisKind::LogOdds;
    h.k = k;
    h.log_odds = a;
    h.odds_target = c;
    h.generators = {log_odds_to_binomial(a, c, k)};
    h.variables = default_variable_names(k);
    return h;
}

NullHypothesis custom(const std::vector<Polynomial>& generators, std::vector<std::string> variables) {
    if (generators.empty()) throw InvalidArgument("custom hypothesis needs at least one generator");
    NullHypothesis h;
    h.kind = HypothesisKind::Custom;
    h.k = generators.front().nvars();
    for (const auto& g : generators) {
        if (g.nvars() != h.k) throw DimensionError("custom generators have different numbers of variables");
        if (g.is_constant()) throw InvalidArgument("custom generators must be nonconstant");
    }
    h.generators = generators;
    h.variables = variables.empty() ? default_variable_names(h.k) : std::move(variables);
    return h;
}

NullHypothesis build_hypothesis(const HypothesisSpec& spec) {
    const std::string& kind = spec.kind;
    if (kind == "independence") return independence(spec.p, spec.q);
    if (kind == "rank_lt") return rank_less_than(spec.p, spec.q, spec.r);
    if (kind == "symmetry") return symmetry(spec.p);
    if (kind == "motzkin") return motzkin();
    if (kind == "sphere") {
        if (spec.delta_sq) return sphere(spec.k, *spec.delta_sq);
        if (spec.delta) {
            if (*spec.delta <= 0) throw InvalidArgument("sphere radius must be positive");
            return sphere(spec.k, *spec.delta * *spec.delta);
        }
        throw InvalidArgument("sphere hypothesis needs delta or delta_sq");
    }
    if (kind == "affine") return affine(spec.matrix, spec.vector);
    if (kind == "polytope") return polytope(spec.matrix, spec.vector, spec.k);
    if (kind == "logodds") {
        if (!spec.c) throw InvalidArgument("logodds hypothesis needs the odds target c");
        return log_odds(spec.a, *spec.c, spec.k ? spec.k : spec.a.size() + 1);
    }
    if (kind == "custom") {
        if (spec.generators.empty()) throw InvalidArgument("custom hypothesis needs generators");
        std::vector<std::string> vars = spec.variables;
        if (vars.empty()) {
            if (spec.k == 0) throw InvalidArgument("custom hypothesis needs k or variables");
            vars = default_variable_names(spec.k);
        }
        std::vector<Polynomial> gens;
        for (const auto& g : spec.generators) gens.push_back(parse_poly(g, vars));
        return custom(gens, vars);
    }
    throw InvalidArgument("unknown hypothesis kind '" + kind + "'");
}

ExistenceVerdict polytope_existence(const RationalMatrix& a, const RationalVector& b, std::size_t k,
                                    StepBudget* budget) {
    if (k < 2) throw InvalidArgument("polytope existence needs k >= 2");
    if (a.empty() || a.size() != b.size()) throw InvalidArgument("A and b must have the same nonzero number of rows");
    const std::size_t d = k - 1;
    for (const auto& row : a)
        if (row.size() != d) throw DimensionError("polytope rows must have k-1 entries");
    const std::size_t m = a.size();
    const std::size_t s = d;  // index of the slack variable

    auto with_slack = [&](const RationalVector& row, const Rational& slack_coef) {
        RationalVector r(row);
        r.push_back(slack_coef);
        return r;
    };
    // pi_l >= s and 1 - sum(pi) >= s, or the closed simplex when interior is false.
    auto add_simplex = [&](LinearProgram& lp, bool interior) {
        for (std::size_t l = 0; l < d; ++l) lp.add(with_slack(unit(d, l), interior ? -1 : 0), Sense::GreaterEqual, 0);
        lp.add(with_slack(RationalVector(d, 1), interior ? 1 : 0), Sense::LessEqual, 1);
    };
    auto slack_program = [&]() {
        LinearProgram lp(d + 1);
        lp.objective = unit(d + 1, s);
        lp.add(unit(d + 1, s), Sense::LessEqual, 1);
        return lp;
    };

    {
        LinearProgram lp(d);
        for (std::size_t i = 0; i < m; ++i) lp.add(a[i], Sense::GreaterEqual, b[i]);
        for (std::size_t l = 0; l < d; ++l) lp.add(unit(d, l), Sense::GreaterEqual, 0);
        lp.add(RationalVector(d, 1), Sense::LessEqual, 1);
        if (solve(lp, budget).status == LPStatus::Infeasible)
            throw InvalidArgument("polytope null hypothesis is empty on the simplex");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (std::all_of(a[i].begin(), a[i].end(), [](const Rational& x) { return sgn(x) == 0; }))
            throw InvalidArgument("row " + std::to_string(i) + " of A is zero");
        LinearProgram lp = slack_program();
        lp.add(with_slack(a[i], 0), Sense::Equal, b[i]);
        add_simplex(lp, true);
        LPResult r = solve(lp, budget);
        if (r.status != LPStatus::Optimal || r.value <= 0)
            throw InvalidArgument("facet " + std::to_string(i) + " does not meet the interior of the simplex");

        LinearProgram red = slack_program();
        red.add(with_slack(a[i], 0), Sense::Equal, b[i]);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) red.add(with_slack(a[j], -1), Sense::GreaterEqual, b[j]);
        add_simplex(red, false);
        r = solve(red, budget);
        if (r.status != LPStatus::Optimal || r.value <= 0)
            throw InvalidArgument("row " + std::to_string(i) + " is redundant and does not define a facet");
    }

    ExistenceVerdict verdict;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            LinearProgram lp = slack_program();
            lp.add(with_slack(a[i], 0), Sense::Equal, b[i]);
            lp.add(with_slack(a[j], 0), Sense::Equal, b[j]);
            for (std::size_t l = 0; l < m; ++l)
                if (l != i && l != j) lp.add(with_slack(a[l], 0), Sense::GreaterEqual, b[l]);
            add_simplex(lp, true);
            LPResult r = solve(lp, budget);
            if (r.status == LPStatus::Optimal && r.value > 0) {
                verdict.exists = false;
                verdict.facet_i = i;
                verdict.facet_j = j;
                verdict.point.assign(r.x.begin(), r.x.begin() + static_cast<long>(d));
                return verdict;
            }
        }
    Polynomial w = Polynomial::constant(d, -1);
    for (std::size_t i = 0; i < m; ++i) w *= linear_form(a[i], b[i]);
    verdict.exists = true;
    verdict.separating = w;
    return verdict;
}

Polynomial log_odds_to_binomial(const RationalVector& a, const Rational& c, std::size_t k) {
    if (k < 2 || a.size() != k - 1) throw DimensionError("log-odds vector must have k-1 entries");
    if (c <= 0) throw InvalidArgument("odds target must be positive");
    if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; }))
        throw InvalidArgument("log-odds coefficients are all zero");
    Integer l = 1;
    for (const auto& x : a) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> m;
    Integer g = 0;
    for (const auto& x : a) {
        Rational t = x * l;
        m.push_back(t.get_num());
        g = gcd(g, m.back());
    }
    if (!l.fits_ulong_p() || !g.fits_ulong_p()) throw InvalidArgument("log-odds exponents too large");
    Rational target = rpow(c, static_cast<long>(l.get_ui()));
    Rational root;
    if (rational_root(target, g.get_ui(), root)) {
        for (auto& x : m) x /= g;
        target = root;
    }
    Integer total = 0;
    for (const auto& x : m) total += x;
    Exponents lhs(k, 0), rhs(k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!m[i].fits_slong_p()) throw InvalidArgument("log-odds exponents too large");
        long e = m[i].get_si();
        (e > 0 ? lhs[i] : rhs[i]) = static_cast<std::uint32_t>(e > 0 ? e : -e);
    }
    long t = total.get_si();
    (t > 0 ? rhs[k - 1] : lhs[k - 1]) = static_cast<std::uint32_t>(t > 0 ? t : -t);
    return Polynomial::monomial(lhs) - Polynomial::monomial(rhs, target);
}

std::vector<RationalVector> sample_simplex_points(std::size_t k, std::size_t count, std::uint64_t seed,
                                                  bool interior) {
    Halton h(seed);
    std::vector<RationalVector> out;
    for (std::size_t s = 0; s < count; ++s) {
        RationalVector v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = h.at(s, i);
        if (!interior && s % 5 == 4) v[s % k] = 0;
        out.push_back(normalize(std::move(v)));
    }
    return out;
}

std::vector<RationalVector> sample_null_points(const NullHypothesis& h, std::size_t count, std::uint64_t seed) {
    Halton hal(seed);
    const std::size_t k = h.k;
    std::vector<RationalVector> out;
    switch (h.kind) {
        case HypothesisKind::Independence:
        case HypothesisKind::RankLessThan: {
            const auto& sh = *h.shape;
            const std::size_t terms = h.rank - 1;
            for (std::size_t s = 0; s < count; ++s) {
                RationalVector pt(k, 0);
                std::size_t d = 0;
                RationalVector w(terms);
                for (auto& x : w) x = hal.at(s, d++);
                w = normalize(w);
                for (std::size_t t = 0; t < terms; ++t) {
                    RationalVector row(sh.p), col(sh.q);
                    for (auto& x : row) x = hal.at(s, d++);
                    for (auto& x : col) x = hal.at(s, d++);
                    row = normalize(row);
                    col = normalize(col);
                    for (std::size_t i = 0; i < sh.p; ++i)
                        for (std::size_t j = 0; j < sh.q; ++j) pt[sh.index(i, j)] += w[t] * row[i] * col[j];
                }
                out.push_back(std::move(pt));
            }
            return out;
        }
        case HypothesisKind::Symmetry: {
            const auto& sh = *h.shape;
            for (std::size_t s = 0; s < count; ++s) {
                RationalVector pt(k);
                std::size_t d = 0;
                for (std::size_t i = 0; i < sh.p; ++i)
                    for (std::size_t j = i; j < sh.p; ++j) {
                        Rational v = hal.at(s, d++);
                        pt[sh.index(i, j)] = v;
                        pt[sh.index(j, i)] = v;
                    }
                out.push_back(normalize(std::move(pt)));
            }
            return out;
        }
        case HypothesisKind::Motzkin: {
            for (std::size_t s = 0; s < count; ++s) {
                Rational v = hal.at(s, 0) / 3;
                out.push_back({v, v, v, 1 - 3 * v});
            }
            return out;
        }
        case HypothesisKind::Affine: {
            std::vector<LinearConstraint> extra;
            for (std::size_t i = 0; i < h.matrix.size(); ++i) extra.push_back({h.matrix[i], Sense::Equal, h.vector[i]});
            return mixtures(lp_vertices(k, extra), count, hal);
        }
        case HypothesisKind::Polytope: {
            std::vector<LinearConstraint> extra;
            for (std::size_t i = 0; i < h.matrix.size(); ++i) {
                RationalVector row = h.matrix[i];
                row.push_back(0);
                extra.push_back({row, Sense::GreaterEqual, h.vector[i]});
            }
            return mixtures(lp_vertices(k, extra), count, hal);
        }
        case HypothesisKind::Sphere: {
            // Chord method: a rational base point u0 and rational directions w give the second
            // intersection u0 + t w of the line with the sphere, which is again rational.
            std::vector<long> m;
            long q = 0;
            for (long cand = 1; cand <= 60 && q == 0; ++cand) {
                Rational target = h.delta_sq * cand * cand;
                if (target.get_den() != 1 || !target.get_num().fits_slong_p()) continue;
                if (find_lattice_point(k, target.get_num().get_si(), m)) q = cand;
            }
            if (q == 0) throw InvalidArgument("no rational point found on the sphere; sampling unsupported for this radius");
            RationalVector u0(k);
            for (std::size_t i = 0; i < k; ++i) u0[i] = ratio(m[i], q);
            Rational center(1, static_cast<long>(k));
            std::uint64_t attempt = 0;
            while (out.size() < count) {
                if (attempt > 200 * (count + 10)) throw InvalidArgument("sphere sampling failed to find simplex points");
                RationalVector w(k);
                for (std::size_t i = 0; i < k; ++i) w[i] = hal.at(attempt, i) - Rational(1, 2);
                ++attempt;
                Rational mean = std::accumulate(w.begin(), w.end(), Rational(0)) / static_cast<long>(k);
                for (auto& x : w) x -= mean;
                Rational ww = dot(w, w);
                Rational uw = dot(u0, w);
                if (ww == 0 || uw == 0) continue;
                Rational t = -2 * uw / ww;
                RationalVector pt(k);
                bool inside = true;
                for (std::size_t i = 0; i < k; ++i) {
                    pt[i] = center + u0[i] + t * w[i];
                    if (pt[i] < 0) inside = false;
                }
                if (inside) out.push_back(std::move(pt));
            }
            return out;
        }
        case HypothesisKind::LogOdds: {
            // g = c0 pi^A + c1 pi^B, i.e. prod_i (pi_i / pi_k)^(A_i - B_i) = -c1 / c0 since g is homogeneous.
            const Polynomial& g = h.generators.front();
            const Exponents& pos = g.terms()[0].exponents;
            const Exponents& neg = g.terms()[1].exponents;
            Rational c_prime = -g.terms()[1].coefficient / g.terms()[0].coefficient;
            std::vector<long> e(k - 1);
            for (std::size_t i = 0; i + 1 < k; ++i) e[i] = static_cast<long>(pos[i]) - static_cast<long>(neg[i]);
            // Bezout vector z with sum z_i e_i = gcd(e), so o_i = root^(z_i) is a particular solution.
            std::vector<Integer> z(k - 1, 0);
            Integer gg = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) {
                if (e[i] == 0) continue;
                if (gg == 0) {
                    gg = e[i];
                    z[i] = 1;
                    continue;
                }
                Integer g2, s1, t1;
                mpz_gcdext(g2.get_mpz_t(), s1.get_mpz_t(), t1.get_mpz_t(), gg.get_mpz_t(), Integer(e[i]).get_mpz_t());
                for (auto& x : z) x *= s1;
                z[i] = t1;
                gg = g2;
            }
            if (gg < 0) {
                gg = -gg;
                for (auto& x : z) x = -x;
            }
            Rational base_root;
            if (!rational_root(c_prime, gg.get_ui(), base_root))
                throw InvalidArgument("log-odds null set has no rational points");
            std::size_t j0 = 0;
            while (e[j0] == 0) ++j0;
            for (std::size_t s = 0; s < count; ++s) {
                RationalVector o(k - 1);
                for (std::size_t i = 0; i + 1 < k; ++i) o[i] = rpow(base_root, z[i].get_si());
                std::size_t d = 0;
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    if (i == j0) continue;
                    // Kernel direction e_{j0} * unit_i - e_i * unit_{j0}, scaled by a random base.
                    Rational t = hal.at(s, d++) + Rational(1, 2);
                    long g12 = std::gcd(std::labs(e[j0]), std::labs(e[i]));
                    if (g12 == 0) g12 = 1;
                    o[i] *= rpow(t, e[j0] / g12);
                    o[j0] *= rpow(t, -e[i] / g12);
                }
                Rational denom = 1 + std::accumulate(o.begin(), o.end(), Rational(0));
                RationalVector pt(k);
                for (std::size_t i = 0; i + 1 < k; ++i) pt[i] = o[i] / denom;
                pt[k - 1] = 1 / denom;
                out.push_back(std::move(pt));
            }
            return out;
        }
        case HypothesisKind::Custom:
            break;
    }
    throw InvalidArgument(to_string(h.kind) + " hypothesis has no built-in rational parameterization");
}

}  // namespace powerpoly
