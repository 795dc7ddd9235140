// Acceptance suite: one PASS/FAIL line per criterion.
//
//   powerpoly_acceptance [--criterion N] [--stretch] [--step-limit S]
//
// --stretch also enumerates the sphere polytope vertices at n = 7 and n = 8, the latter under
// the step limit. Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "test_support.hpp"

namespace powerpoly {
namespace {

using testing::P;
using testing::Q;
using testing::Qv;

struct Options {
    bool stretch = false;
    std::uint64_t step_limit = 600'000'000;
};

// Collects failed checks and informational notes for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool passed() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

std::set<RationalVector> as_set(const std::vector<RationalVector>& v) { return {v.begin(), v.end()}; }

RationalVector reversed(RationalVector v) {
    std::reverse(v.begin(), v.end());
    return v;
}

RationalVector head(const RationalVector& v) { return {v.begin(), v.end() - 1}; }

const Rational kAlpha = Q("1/20");

void linear_golden(Check& c, const Options&) {
    Stopwatch sw;
    Polynomial f = P("p1 + p2 - p3", 3);
    CoefficientPolytope p = enumerate_vertices(coefficient_polytope(f, 3, kAlpha));
    // The printed table lists coordinates in the reverse of our order.
    std::vector<RationalVector> printed = {
        Qv({"-0.05", "0.05", "-0.05"}), Qv({"0.05", "0.1", "-0.05"}),  Qv({"-0.05", "-0.05", "-0.05"}),
        Qv({"0.05", "-0.05", "-0.05"}), Qv({"-0.05", "-0.05", "0.05"}), Qv({"0.05", "-0.05", "0.1"}),
        Qv({"-0.05", "0.05", "0.05"}),  Qv({"0.15", "0.15", "0.15"}),
    };
    std::set<RationalVector> expected;
    for (const auto& v : printed) expected.insert(reversed(v));
    c.expect(as_set(*p.vertices) == expected, "vertex set differs from the printed table");
    c.expect(p.vertices->size() == 8, "expected 8 vertices, got " + std::to_string(p.vertices->size()));

    UMPUVerdict v = umpu_search(f, 3, kAlpha);
    c.expect(v.status == UMPUStatus::Exists, "verdict " + to_string(v.status));
    Polynomial s = Polynomial::sum_of_variables(3);
    Polynomial beta = Q("3/20") * f * f * s + kAlpha * pow(s, 3);
    c.expect(v.beta && v.beta->poly == beta, "power polynomial differs");
    double t = sw.seconds();
    c.expect(t < 1.0, "took " + fmt(t) + " s");
    c.note("8 vertices, h* = " + to_string(v.h_star) + ", " + fmt(t) + " s");
}

void no_maximum_golden(Check& c, const Options&) {
    Polynomial f = P("2*p1 + p2 - p3", 3);
    CoefficientPolytope p = enumerate_vertices(coefficient_polytope(f, 3, kAlpha));
    std::set<RationalVector> oracle = testing::brute_force_vertices(p.halfspaces(), p.dim());
    c.expect(as_set(*p.vertices) == oracle, "double description disagrees with brute-force enumeration");
    c.expect(p.vertices->size() == 13, "expected 13 vertices, got " + std::to_string(p.vertices->size()));
    c.expect(!componentwise_max(*p.vertices).maximum, "a componentwise maximum was found");
    UMPUVerdict v = umpu_search(f, 3, kAlpha);
    c.expect(v.status == UMPUStatus::NotExists, "verdict " + to_string(v.status));

    std::vector<RationalVector> printed = {
        Qv({"-0.05", "-0.025", "-0.0125"}),    Qv({"0.0625", "-0.025", "0.1"}), Qv({"-0.0375", "-0.0375", "0"}),
        Qv({"0.0125", "-0.05", "0.05"}),       Qv({"0.05", "-0.5", "0.0875"}),  Qv({"0.0375", "-0.0375", "0"}),
        Qv({"0.03438", "-0.025", "-0.0125"}),  Qv({"0.05", "-0.05", "0.05"}),   Qv({"-0.03438", "0.09219", "-0.0125"}),
        Qv({"-0.0125", "0.06875", "-0.0125"}), Qv({"0.05", "0.1", "0.05"}),     Qv({"0.0625", "0.0875", "0.1"}),
        Qv({"-0.05", "0.03125", "-0.0125"}),
    };
    // Printed values are rounded to at most five decimals.
    auto near = [](const RationalVector& a, const RationalVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(to_double(a[i] - b[i])) > 5e-5) return false;
        return true;
    };
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        RationalVector ours = reversed(printed[i]);
        const RationalVector* best = nullptr;
        int best_agree = -1;
        for (const auto& e : oracle) {
            if (near(ours, e)) {
                best = &e;
                best_agree = 3;
                break;
            }
            int agree = 0;
            for (std::size_t j = 0; j < 3; ++j) agree += std::abs(to_double(ours[j] - e[j])) <= 5e-5;
            if (agree > best_agree) {
                best_agree = agree;
                best = &e;
            }
        }
        if (best_agree == 3) continue;
        ++mismatches;
        std::string closest = best ? to_string(reversed(*best)) : "none";
        c.note("reported: printed vertex " + std::to_string(i + 1) + " " + to_string(printed[i]) +
               " matches no recomputed vertex; closest recomputed (printed order) " + closest);
    }
    c.note("13 vertices, no componentwise maximum, " + std::to_string(mismatches) + " printed entries reported");
}

void sphere_suite(Check& c, const Options& opt) {
    Polynomial f = sphere(3, Q("1/6")).generators[0];

    CoefficientPolytope p5 = enumerate_vertices(coefficient_polytope(f, 5, kAlpha));
    c.expect(p5.vertices->size() == 8, "n=5: expected 8 vertices, got " + std::to_string(p5.vertices->size()));
    ComponentwiseMax cm = componentwise_max(*p5.vertices);
    c.expect(cm.maximum && *cm.maximum == Qv({"1/3", "1/3", "1/3"}), "n=5: maximum is not (1/3,1/3,1/3)");
    UMPUVerdict v5 = umpu_search(f, 5, kAlpha, 3);
    c.expect(v5.status == UMPUStatus::Exists, "n=5: verdict " + to_string(v5.status));

    UMPUVerdict v6 = umpu_search(f, 6, kAlpha, 3);
    c.expect(v6.status == UMPUStatus::Candidate, "n=6: verdict " + to_string(v6.status));
    RationalVector h6 = Qv({"3/5", "6/5", "3/5", "6/5", "6/5", "3/5"});  // p1^2, p1p2, p2^2, p1p3, p2p3, p3^2
    c.expect(v6.h_star == h6, "n=6: h* = " + to_string(v6.h_star));
    c.note("n=6: " + std::to_string(v6.vertex_count) + " vertices, candidate h* = " + to_string(v6.h_star));

    for (unsigned n : {7u, 8u}) {
        CoefficientPolytope p = coefficient_polytope(f, n, kAlpha);
        c.note("n=" + std::to_string(n) + ": dimension " + std::to_string(p.dim()) + ", " +
               std::to_string(p.halfspace_count()) + " halfspaces");
    }
    std::size_t h8 = coefficient_polytope(f, 8, kAlpha).halfspace_count();
    c.expect(h8 == 72, "n=8: expected 72 halfspaces, the H-representation has " + std::to_string(h8) +
                           " (two per multi-index L with |L| = 8; 72 is the count at n=7)");

    if (!opt.stretch) return;
    for (unsigned n : {7u, 8u}) {
        Stopwatch sw;
        StepBudget budget(opt.step_limit);
        try {
            CoefficientPolytope p = enumerate_vertices(coefficient_polytope(f, n, kAlpha), &budget);
            c.note("stretch n=" + std::to_string(n) + ": " + std::to_string(p.vertices->size()) + " vertices in " +
                   fmt(sw.seconds()) + " s");
        } catch (const StepLimitExceeded&) {
            c.note("stretch n=" + std::to_string(n) + ": step limit " + std::to_string(opt.step_limit) +
                   " reached after " + fmt(sw.seconds()) + " s");
        }
    }
}

// Multiset shape of a count vector with n = 4, e.g. {2,1,1,0} -> "iijk".
std::string shape(const Exponents& x) {
    std::vector<unsigned> parts;
    for (auto e : x)
        if (e) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    std::string s;
    char label = 'i';
    for (auto p : parts) {
        s += std::string(p, label);
        ++label;
    }
    return s;
}

void c_alpha_golden(Check& c, const Options&) {
    Stopwatch sw;
    NullHypothesis h = sphere(4, Q("1/4"));  // gamma = 1/k + delta^2 = 1/2
    for (const char* a : {"1/100", "1/20", "1/10", "1/4", "1/3", "1/2"}) {
        Rational alpha = Q(a);
        UMPUPower u = principal_umpu(h.generators[0], 4, alpha);
        c.expect(u.c_alpha == 4 * alpha, std::string("alpha=") + a + ": c = " + to_string(u.c_alpha));
        TestFunction phi = recover_test(u.beta);
        std::map<std::string, Rational> expected = {{"iiii", 2 * alpha},
                                                    {"iiij", 0},
                                                    {"iijj", 2 * alpha},
                                                    {"iijk", Rational(4) * alpha / 3},
                                                    {"ijkl", 2 * alpha}};
        for (const auto& x : phi.points()) {
            Rational want = expected.at(shape(x));
            if (phi(x) != want)
                c.expect(false, std::string("alpha=") + a + ": phi" + to_string(RationalVector(x.begin(), x.end())) +
                                    " = " + to_string(phi(x)) + ", expected " + to_string(want));
        }
    }
    double t = sw.seconds();
    c.expect(t < 1.0, "took " + fmt(t) + " s");
    c.note("c = 4 alpha and the five-case table hold for six levels in " + fmt(t) + " s");
}

NullHypothesis constrained23() {
    auto v = ContingencyShape{2, 3}.variable_names();
    return custom({parse_poly("p11*p22 - p12*p21", v), parse_poly("p11*p23 - p13*p21", v),
                   parse_poly("2*p11 + 2*p21 - p11 - p12 - p13", v)},
                  v);
}

void threshold_goldens(Check& c, const Options&) {
    NullHypothesis ind = independence(2, 2);
    ThresholdReport r = sos_bounds(hypothesis_basis(ind), ind);
    c.expect(r.ntub_bound == 4 && r.sub_bound == 4, "independence(2,2): ntub " + std::to_string(r.ntub_bound) +
                                                        ", sub " + std::to_string(r.sub_bound));

    NullHypothesis e5 = constrained23();
    ThresholdReport r5 = sos_bounds(hypothesis_basis(e5), e5);
    c.expect(r5.basis_degrees == std::vector<int>{1, 2, 2, 3}, "example: basis degrees differ");
    c.expect(r5.cut_out_degree == 2, "example: d = " + std::to_string(r5.cut_out_degree));
    c.expect(r5.ntub_bound == 2 && r5.sub_bound == 4, "example: ntub " + std::to_string(r5.ntub_bound) +
                                                          ", sub " + std::to_string(r5.sub_bound));
    c.expect(r5.redundant == std::vector<std::size_t>{3}, "example: cubic not certified redundant");

    for (auto [p, q, rk] : std::vector<std::array<std::size_t, 3>>{{2, 2, 2}, {3, 3, 2}, {3, 3, 3}}) {
        ThresholdReport t = rank_threshold(p, q, rk);
        std::string tag = "rank_threshold(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(rk) + ")";
        c.expect(t.ntub_bound == static_cast<int>(2 * rk) && t.sub_bound == static_cast<int>(2 * rk),
                 tag + " = " + std::to_string(t.sub_bound));
    }

    int u = union_threshold({P("p1 - p2", 3), P("p1 - p3", 3), P("p2 - p3", 3)});
    c.expect(u == 6, "union of equal-coordinate lines: " + std::to_string(u));
}

void polytope_goldens(Check& c, const Options&) {
    RationalMatrix square = {Qv({"-1", "0"}), Qv({"0", "-1"})};
    ExistenceVerdict t34 = polytope_existence(square, Qv({"-3/4", "-3/4"}), 3);
    c.expect(t34.exists, "t=3/4: no test reported");
    Polynomial witness = Polynomial::constant(2, -1) * P("p1 - 3/4", 2) * P("p2 - 3/4", 2);
    c.expect(t34.separating && *t34.separating == witness, "t=3/4: witness differs");

    ExistenceVerdict t14 = polytope_existence(square, Qv({"-1/4", "-1/4"}), 3);
    c.expect(!t14.exists, "t=1/4: a test was reported");
    c.expect(t14.point == Qv({"1/4", "1/4"}), "t=1/4: corner " + to_string(t14.point));
    bool interior = !t14.point.empty() && t14.point[0] > 0 && t14.point[1] > 0 && t14.point[0] + t14.point[1] < 1;
    c.expect(interior, "t=1/4: certificate corner is not interior");

    ExistenceVerdict ord = polytope_existence({Qv({"-1", "1"}), Qv({"-1", "-2"})}, Qv({"0", "-1"}), 3);
    c.expect(!ord.exists, "ordering: a test was reported");
    c.expect(ord.point == Qv({"1/3", "1/3"}), "ordering: corner " + to_string(ord.point));
}

TestFunction random_test(testing::RandomRationals& rnd, unsigned n, std::size_t k) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < compositions(n, static_cast<unsigned>(k)).size(); ++i) values.push_back(rnd.unit());
    return TestFunction(n, k, values);
}

void correspondence_properties(Check& c, const Options&) {
    testing::RandomRationals rnd(2024);
    int round_trips = 0, round_trip_failures = 0;
    for (; round_trips < 500; ++round_trips) {
        unsigned n = 1 + static_cast<unsigned>(rnd.index(5));
        std::size_t k = 2 + rnd.index(3);
        TestFunction phi = random_test(rnd, n, k);
        PowerPolynomial beta = test_to_power(phi);
        RationalVector s = rnd.simplex_point(k);
        bool ok = box_check(beta.poly, n, k).ok && recover_test(beta) == phi &&
                  evaluate(beta.poly, s) == exact_power(phi, s);
        round_trip_failures += !ok;
    }
    c.expect(round_trip_failures == 0, std::to_string(round_trip_failures) + " round trips failed");

    int normalized = 0, normalize_failures = 0;
    while (normalized < 500) {
        std::size_t k = 2 + rnd.index(3);
        Polynomial bt = rnd.polynomial(k, 3, 4);
        unsigned n = static_cast<unsigned>(std::max(bt.degree(), 1)) + static_cast<unsigned>(rnd.index(2));
        NormalizedPower np;
        try {
            np = normalize_to_power(bt, n, k);
        } catch (const InvalidArgument&) {
            continue;  // constant on the simplex
        }
        ++normalized;
        bool ok = box_check(np.power.poly, n, k).ok && np.a > 0;
        RationalVector s = rnd.simplex_point(k);
        ok = ok && sgn(evaluate(np.power.poly, s) - np.size()) == sgn(evaluate(bt, s));
        normalize_failures += !ok;
    }
    c.expect(normalize_failures == 0, std::to_string(normalize_failures) + " normalizations broke boxes or signs");

    struct Family {
        const char* name;
        NullHypothesis h;
    };
    std::vector<Family> families = {
        {"independence", independence(2, 3)},
        {"rank", rank_less_than(3, 3, 3)},
        {"sphere", sphere(3, Q("1/6"))},
        {"symmetry", symmetry(3)},
        {"affine", affine({Qv({"1", "1", "-1"})}, Qv({"0"}))},
        {"log-odds", log_odds(Qv({"1", "1"}), 1, 3)},
    };
    for (const auto& f : families) {
        ThresholdReport r = sos_bounds(hypothesis_basis(f.h), f.h);
        std::vector<Polynomial> separating = {r.ntub_witness, r.sub_witness};
        std::vector<RationalVector> nulls = sample_null_points(f.h, 50, 31);
        c.expect(nulls.size() >= 50, std::string(f.name) + ": only " + std::to_string(nulls.size()) + " null points");
        std::size_t bad = 0;
        for (const auto& s : nulls) {
            for (const auto& w : separating) bad += evaluate(w, head(s)) != 0;
            bad += evaluate(f.h.sos_witness(), s) != 0;
        }
        // The normalized power polynomial of the SUB witness equals its size on the null set.
        unsigned n = static_cast<unsigned>(r.sub_bound);
        NormalizedPower np = normalize_to_power(r.sub_witness, n, f.h.k);
        for (const auto& s : nulls) bad += evaluate(np.power.poly, s) != np.size();
        c.expect(bad == 0, std::string(f.name) + ": " + std::to_string(bad) + " nonzero evaluations on the null set");
    }
    c.note("500 round trips, 500 normalizations, 6 families x 50 null points");
}

void groebner_properties(Check& c, const Options&) {
    testing::RandomRationals rnd(77);
    int bases = 0;
    for (int i = 0; i < 80; ++i) {
        MonomialOrder order = i % 2 ? MonomialOrder::GradedLex : MonomialOrder::GradedRevLex;
        std::vector<Polynomial> gens;
        for (int j = 0; j < 3; ++j) {
            Polynomial g = rnd.polynomial(3, 2, 3, order);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        StepBudget budget(2'000'000);
        GroebnerBasis gb;
        try {
            gb = buchberger_reduced(gens, order, &budget);
        } catch (const StepLimitExceeded&) {
            continue;
        }
        ++bases;
        const auto& e = gb.elements;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                c.expect(remainder(s_polynomial(e[a], e[b]), e, order).is_zero(),
                         "S-polynomial with nonzero remainder in basis " + std::to_string(i));
        std::vector<Polynomial> permuted = gens;
        std::reverse(permuted.begin(), permuted.end());
        std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
        c.expect(buchberger_reduced(permuted, order).elements == e, "permuted generators changed basis " + std::to_string(i));
    }
    c.expect(bases >= 60, "only " + std::to_string(bases) + " random bases finished");

    auto v = std::vector<std::string>{"p11", "p12", "p13", "p21", "p22"};
    std::vector<Polynomial> printed = {
        parse_poly("p11 - p12 - p13 + 2*p21", v),
        parse_poly("p12*p21 - p12*p22 - p13*p22 + 2*p21*p22", v),
        parse_poly("2*p12^2 + 4*p12*p13 + 2*p13^2 - 4*p13*p21 + 2*p21^2 - 4*p12*p22 - 4*p13*p22 + 8*p21*p22 - p12 - "
                   "p13 + 2*p21",
                   v),
        parse_poly("2*p13^2*p21 - 4*p13*p21^2 + 2*p21^3 + 2*p12*p13*p22 + 2*p13^2*p22 - 8*p13*p21*p22 + 6*p21^2*p22 - "
                   "4*p12*p22^2 - 4*p13*p22^2 + 8*p21*p22^2 - p13*p21 + 2*p21^2",
                   v),
    };
    GroebnerBasis gb = buchberger_reduced(printed, MonomialOrder::GradedRevLex);
    bool fixed = gb.elements.size() == printed.size();
    for (std::size_t i = 0; fixed && i < printed.size(); ++i) fixed = gb.elements[i] == printed[i].monic();
    c.expect(fixed, "printed example basis is not a fixed point");
    c.note(std::to_string(bases) + " random reduced bases checked");
}

void monte_carlo_consistency(Check& c, const Options&) {
    Stopwatch sw;
    testing::RandomRationals rnd(99);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        TestFunction phi = i % 4 == 0 ? max_statistic_test(12 + i, Q("1/4"), Q("848509/1000000"))
                                      : random_test(rnd, 4 + static_cast<unsigned>(rnd.index(7)), 2 + rnd.index(3));
        RationalVector pi = rnd.simplex_point(phi.k());
        std::vector<double> pd;
        for (const auto& x : pi) pd.push_back(to_double(x));
        MonteCarloEstimate est = monte_carlo_power(phi, pd, 100000, 1000 + static_cast<std::uint64_t>(i));
        double exact = to_double(exact_power(phi, pi));
        double dev = std::abs(est.estimate - exact);
        bool ok = dev <= 4 * est.standard_error;
        if (est.standard_error > 0) worst = std::max(worst, dev / est.standard_error);
        c.expect(ok, "pair " + std::to_string(i) + ": |" + fmt(est.estimate) + " - " + fmt(exact) + "| > 4 se (" +
                         fmt(est.standard_error) + ")");
    }
    double t = sw.seconds();
    c.expect(t < 30.0, "took " + fmt(t) + " s");
    c.note("20 pairs, largest deviation " + fmt(worst) + " se, " + fmt(t) + " s");
}

// Largest |power - 0.05| over grid nodes on the two edges of [0,1/4]^2 inside the open simplex.
double boundary_gap(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    double gap = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string a, b, pw;
        std::getline(row, a, ',');
        std::getline(row, b, ',');
        std::getline(row, pw, ',');
        double x = std::stod(a), y = std::stod(b), power = std::stod(pw);
        auto on = [](double u) { return std::abs(u - 0.25) < 1e-9; };
        bool edge = (on(x) && y <= 0.25 + 1e-9) || (on(y) && x <= 0.25 + 1e-9);
        if (!edge) continue;
        ++count;
        gap = std::max(gap, std::abs(power - 0.05));
    }
    if (count == 0) throw Error("no boundary nodes in grid");
    return gap;
}

void figure_reproduction(Check& c, const Options&) {
    const Rational critical = Q("848509/1000000");  // P(max of the limiting pair > c) = 0.05 at the corner
    std::map<unsigned, double> gaps;
    for (unsigned n : {15u, 40u}) {
        PowerGrid grid = power_grid(max_statistic_test(n, Q("1/4"), critical), 101, Q("1/2"));
        std::ostringstream csv;
        write_csv(csv, grid);
        gaps[n] = boundary_gap(csv.str());
        c.note("n=" + std::to_string(n) + ": " + std::to_string(grid.rows.size()) + " grid rows, max |power - 0.05| on "
               "the square boundary = " + fmt(gaps[n]));
    }
    c.expect(gaps[40] < gaps[15], "boundary gap does not shrink from n=15 to n=40");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&, const Options&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "UMPU golden, linear hypothesis", linear_golden},
        {2, "UMPU golden, no componentwise maximum", no_maximum_golden},
        {3, "sphere suite", sphere_suite},
        {4, "c_alpha golden for the sphere", c_alpha_golden},
        {5, "threshold goldens", threshold_goldens},
        {6, "polytope existence goldens", polytope_goldens},
        {7, "correspondence properties", correspondence_properties},
        {8, "Groebner properties", groebner_properties},
        {9, "Monte Carlo consistency", monte_carlo_consistency},
        {10, "power surface of the max statistic", figure_reproduction},
    };
    return all;
}

}  // namespace
}  // namespace powerpoly

int main(int argc, char** argv) {
    using namespace powerpoly;
    CLI::App app("powerpoly acceptance suite");
    int only = 0;
    Options opt;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
    app.add_flag("--stretch", opt.stretch, "Attempt the large sphere vertex enumerations");
    app.add_option("--step-limit", opt.step_limit, "Step budget for the stretch enumerations");
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        Check check;
        try {
            c.run(check, opt);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        for (const auto& n : check.notes()) std::cout << "  c" << c.id << ": " << n << "\n";
        std::cout << (check.passed() ? "PASS" : "FAIL") << " c" << c.id << " " << c.name;
        for (const auto& f : check.failures()) std::cout << " | " << f;
        std::cout << std::endl;
        failed += !check.passed();
    }
    return failed == 0 ? 0 : 1;
}
