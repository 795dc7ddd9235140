#include "powerpoly/power.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "powerpoly/errors.hpp"

namespace powerpoly {

std::size_t composition_rank(const Exponents& x) {
    const std::size_t k = x.size();
    unsigned remaining = total_degree(x);
    std::size_t rank = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        // Compositions whose i-th entry exceeds x[i] come first.
        for (unsigned v = remaining; v > x[i]; --v)
            rank += binomial(remaining - v + static_cast<unsigned>(k - i - 2), static_cast<unsigned>(k - i - 2)).get_ui();
        remaining -= x[i];
    }
    return rank;
}

TestFunction::TestFunction(unsigned n, std::size_t k, std::vector<Rational> values)
    : n_(n), k_(k), points_(compositions(n, static_cast<unsigned>(k))), values_(std::move(values)) {
    if (k < 2) throw InvalidArgument("a test needs at least two categories");
    if (values_.size() != points_.size())
        throw InvalidArgument("test has " + std::to_string(values_.size()) + " values, expected " +
                              std::to_string(points_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < 0 || values_[i] > 1)
            throw InvalidArgument("test value " + values_[i].get_str() + " outside [0,1]");
}

TestFunction TestFunction::constant(unsigned n, std::size_t k, const Rational& c) {
    std::size_t count = binomial(n + static_cast<unsigned>(k) - 1, static_cast<unsigned>(k) - 1).get_ui();
    return TestFunction(n, k, std::vector<Rational>(count, c));
}

const Rational& TestFunction::operator()(const Exponents& x) const {
    if (x.size() != k_ || total_degree(x) != n_) throw DimensionError("count vector does not match the test");
    return values_[composition_rank(x)];
}

BoxCheck box_check(const Polynomial& p, unsigned n, std::size_t k) {
    BoxCheck r;
    if (p.nvars() != k) {
        r.ok = false;
        r.reason = "polynomial has " + std::to_string(p.nvars()) + " variables, expected " + std::to_string(k);
        return r;
    }
    for (const auto& t : p.terms())
        if (total_degree(t.exponents) != n) {
            r.ok = false;
            r.reason = "polynomial is not homogeneous of degree " + std::to_string(n);
            return r;
        }
    for (const auto& x : compositions(n, static_cast<unsigned>(k))) {
        Rational c = p.coefficient(x);
        Integer bound = multinomial(x);
        if (c < 0 || c > bound) {
            r.ok = false;
            r.reason = "coefficient outside [0, multinomial]";
            r.x = x;
            r.coefficient = c;
            r.bound = bound;
            return r;
        }
    }
    return r;
}

PowerPolynomial make_power_polynomial(const Polynomial& p, unsigned n, std::size_t k) {
    BoxCheck c = box_check(p, n, k);
    if (!c.ok) {
        std::string where;
        if (!c.x.empty()) {
            where = " at x = (";
            for (std::size_t i = 0; i < c.x.size(); ++i) where += (i ? "," : "") + std::to_string(c.x[i]);
            where += "): coefficient " + c.coefficient.get_str() + ", bound " + c.bound.get_str();
        }
        throw InvalidArgument("not a power polynomial: " + c.reason + where);
    }
    return {n, k, p};
}

PowerPolynomial test_to_power(const TestFunction& phi) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < phi.points().size(); ++i) {
        if (sgn(phi.values()[i]) == 0) continue;
        terms.push_back({phi.points()[i], phi.values()[i] * multinomial(phi.points()[i])});
    }
    return {phi.n(), phi.k(), Polynomial(phi.k(), std::move(terms))};
}

TestFunction recover_test(const PowerPolynomial& beta) {
    make_power_polynomial(beta.poly, beta.n, beta.k);
    std::vector<Rational> values;
    for (const auto& x : compositions(beta.n, static_cast<unsigned>(beta.k)))
        values.push_back(beta.poly.coefficient(x) / multinomial(x));
    return TestFunction(beta.n, beta.k, std::move(values));
}

Polynomial to_simplex_form(const Polynomial& p, unsigned n, std::size_t k) {
    Polynomial q = p.with_order(MonomialOrder::GradedRevLex);
    if (q.nvars() + 1 == k)
        q = extend_variables(q, 1);
    else if (q.nvars() != k)
        throw DimensionError("polynomial has " + std::to_string(p.nvars()) + " variables; expected " +
                             std::to_string(k) + " or " + std::to_string(k - 1));
    return homogenize(q, n);
}

NormalizedPower normalize_to_power(const Polynomial& beta_tilde, unsigned n, std::size_t k) {
    Polynomial h = to_simplex_form(beta_tilde, n, k);
    const auto xs = compositions(n, static_cast<unsigned>(k));
    Polynomial sum_n = pow(Polynomial::sum_of_variables(k), n);
    Rational c0 = h.coefficient(xs.front());
    if ((h - sum_n * c0).is_zero()) throw InvalidArgument("polynomial is constant on the simplex");

    Rational b = 0;
    for (const auto& x : xs) b = std::max(b, Rational(-h.coefficient(x) / multinomial(x)));
    Polynomial shifted = h + sum_n * b;
    Rational a = -1;
    for (const auto& x : xs) {
        Rational c = shifted.coefficient(x);
        if (c <= 0) continue;
        Rational bound = Rational(multinomial(x)) / c;
        if (a < 0 || bound < a) a = bound;
    }
    NormalizedPower out;
    out.a = a;
    out.b = b;
    out.power = make_power_polynomial(shifted * a, n, k);
    return out;
}

Rational exact_power(const TestFunction& phi, const RationalVector& pi) {
    if (pi.size() != phi.k()) throw DimensionError("point dimension does not match the test");
    Rational sum = 0;
    for (const auto& x : pi) {
        if (x < 0) throw InvalidArgument("point has a negative coordinate");
        sum += x;
    }
    if (sum != 1) throw InvalidArgument("point is not on the simplex (coordinates sum to " + sum.get_str() + ")");
    return evaluate(test_to_power(phi).poly, pi);
}

namespace {

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

MonteCarloEstimate monte_carlo_power(const TestFunction& phi, const std::vector<double>& pi, std::uint64_t reps,
                                     std::uint64_t seed) {
    if (reps < 1) throw InvalidArgument("Monte Carlo needs at least one replication");
    if (pi.size() != phi.k()) throw DimensionError("point dimension does not match the test");
    const std::size_t k = phi.k();
    std::vector<double> cdf(k);
    double acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (pi[i] < 0) throw InvalidArgument("negative probability");
        acc += pi[i];
        cdf[i] = acc;
    }
    if (std::abs(acc - 1) > 1e-9) throw InvalidArgument("probabilities do not sum to one");
    std::vector<double> value(phi.values().size());
    for (std::size_t i = 0; i < value.size(); ++i) value[i] = to_double(phi.values()[i]);

    std::mt19937_64 gen(seed);
    std::uint64_t rejections = 0;
    Exponents x(k);
    for (std::uint64_t r = 0; r < reps; ++r) {
        std::fill(x.begin(), x.end(), 0);
        for (unsigned d = 0; d < phi.n(); ++d) {
            double u = uniform01(gen) * acc;
            std::size_t c = 0;
            while (c + 1 < k && u >= cdf[c]) ++c;
            ++x[c];
        }
        if (uniform01(gen) < value[composition_rank(x)]) ++rejections;
    }
    MonteCarloEstimate est;
    est.reps = reps;
    est.estimate = static_cast<double>(rejections) / static_cast<double>(reps);
    est.standard_error = std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(reps));
    return est;
}

std::vector<std::vector<std::size_t>> generate_group(std::size_t nvars, const std::vector<std::vector<std::size_t>>& perms) {
    for (const auto& p : perms) {
        if (p.size() != nvars) throw InvalidArgument("permutation length does not match the variable count");
        std::vector<bool> seen(nvars, false);
        for (auto v : p) {
            if (v >= nvars || seen[v]) throw InvalidArgument("invalid permutation");
            seen[v] = true;
        }
    }
    std::vector<std::size_t> id(nvars);
    for (std::size_t i = 0; i < nvars; ++i) id[i] = i;
    std::set<std::vector<std::size_t>> group{id};
    std::vector<std::vector<std::size_t>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& g : frontier)
            for (const auto& p : perms) {
                std::vector<std::size_t> c(nvars);
                for (std::size_t i = 0; i < nvars; ++i) c[i] = g[p[i]];
                if (group.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

Polynomial symmetrize(const Polynomial& beta, const std::vector<std::vector<std::size_t>>& perms) {
    auto group = generate_group(beta.nvars(), perms);
    Polynomial sum(beta.nvars(), beta.order());
    for (const auto& g : group) sum += permute_variables(beta, g);
    return sum / static_cast<long>(group.size());
}

TestFunction max_statistic_test(unsigned n, const Rational& t, const Rational& c) {
    const auto xs = compositions(n, 3);
    std::vector<Rational> values;
    for (const auto& x : xs) {
        // max(x1,x2) - n t > sqrt(n) c, compared without square roots.
        Rational lhs = Rational(std::max(x[0], x[1])) - t * n;
        bool reject;
        if (c >= 0)
            reject = lhs > 0 && lhs * lhs > c * c * n;
        else
            reject = lhs >= 0 || lhs * lhs < c * c * n;
        values.push_back(reject ? 1 : 0);
    }
    return TestFunction(n, 3, std::move(values));
}

namespace {

struct FastPower {
    explicit FastPower(const TestFunction& phi) : phi_(phi) {
        const double lfn = std::lgamma(phi.n() + 1.0);
        for (std::size_t i = 0; i < phi.points().size(); ++i) {
            if (sgn(phi.values()[i]) == 0) continue;
            double lm = lfn;
            for (auto xi : phi.points()[i]) lm -= std::lgamma(xi + 1.0);
            active_.push_back(i);
            log_mult_.push_back(lm);
            value_.push_back(to_double(phi.values()[i]));
        }
    }

    double operator()(const std::vector<double>& pi) const {
        std::vector<double> logp(pi.size());
        for (std::size_t j = 0; j < pi.size(); ++j) logp[j] = pi[j] > 0 ? std::log(pi[j]) : -INFINITY;
        double sum = 0;
        for (std::size_t a = 0; a < active_.size(); ++a) {
            const Exponents& x = phi_.points()[active_[a]];
            double l = log_mult_[a];
            bool zero = false;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (x[j] == 0) continue;
                if (pi[j] <= 0) {
                    zero = true;
                    break;
                }
                l += x[j] * logp[j];
            }
            if (!zero) sum += value_[a] * std::exp(l);
        }
        return std::clamp(sum, 0.0, 1.0);
    }

    const TestFunction& phi_;
    std::vector<std::size_t> active_;
    std::vector<double> log_mult_;
    std::vector<double> value_;
};

std::size_t thread_count() {
    const char* env = std::getenv("POWERPOLY_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v >= 1 ? static_cast<std::size_t>(v) : 1;
}

}  // namespace

double power_at(const TestFunction& phi, const std::vector<double>& pi) {
    if (pi.size() != phi.k()) throw DimensionError("point dimension does not match the test");
    return FastPower(phi)(pi);
}

PowerGrid power_grid(const TestFunction& phi, std::size_t resolution, const Rational& upper) {
    if (resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
    if (upper <= 0 || upper > 1) throw InvalidArgument("grid upper limit must lie in (0, 1]");
    const std::size_t dims = phi.k() - 1;
    // Nodes are exact rationals i * upper / (res - 1) so the simplex test is exact.
    std::vector<std::vector<std::size_t>> nodes;
    const Rational step = upper / static_cast<long>(resolution - 1);
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims; ++d) total *= resolution;
    for (std::size_t t = 0; t < total; ++t) {
        std::vector<std::size_t> idx(dims);
        std::size_t rest = t;
        for (std::size_t d = dims; d-- > 0;) {
            idx[d] = rest % resolution;
            rest /= resolution;
        }
        Rational s = 0;
        for (auto i : idx) s += step * static_cast<long>(i);
        if (s <= 1) nodes.push_back(std::move(idx));
    }

    FastPower fp(phi);
    PowerGrid grid;
    grid.k = phi.k();
    grid.rows.resize(nodes.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            std::vector<double> pi(phi.k());
            Rational rest = 1;
            std::vector<double> row;
            for (std::size_t j = 0; j < dims; ++j) {
                Rational c = step * static_cast<long>(nodes[r][j]);
                rest -= c;
                pi[j] = to_double(c);
                row.push_back(pi[j]);
            }
            pi[dims] = to_double(rest);
            row.push_back(fp(pi));
            grid.rows[r] = std::move(row);
        }
    };
    const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(1, nodes.size()));
    if (threads <= 1) {
        work(0, nodes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (nodes.size() + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            std::size_t b = t * chunk, e = std::min(nodes.size(), b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const PowerGrid& grid) {
    for (std::size_t j = 1; j < grid.k; ++j) out << "pi_" << j << ',';
    out << "power\n";
    for (const auto& row : grid.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_double(row[j]);
        out << '\n';
    }
}

}  // namespace powerpoly
