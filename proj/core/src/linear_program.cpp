#include "powerpoly/linear_program.hpp"

#include <algorithm>
#include <limits>

namespace powerpoly {

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

namespace {

// Canonical-form tableau: rows hold B^-1 [A | b]; obj holds reduced costs and -z.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m(rows), n(cols), a(rows, RationalVector(cols + 1)), basis(rows) {}

    void pivot(std::size_t r, std::size_t c, RationalVector& obj) {
        Rational p = a[r][c];
        if (p != 1)
            for (auto& v : a[r])
                if (sgn(v) != 0) v /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            eliminate(a[i], c, a[r]);
        }
        if (sgn(obj[c]) != 0) eliminate(obj, c, a[r]);
        basis[r] = c;
    }

    // Maximize using the reduced-cost row obj over columns [0, active). Returns false if unbounded.
    bool optimize(RationalVector& obj, std::size_t active, StepBudget* budget) {
        std::size_t degenerate_run = 0;
        while (true) {
            tick(budget, "simplex pivot");
            bool bland = degenerate_run > 50;
            std::size_t enter = n;
            for (std::size_t j = 0; j < active; ++j) {
                if (sgn(obj[j]) <= 0) continue;
                if (enter == n || (!bland && obj[j] > obj[enter])) {
                    enter = j;
                    if (bland) break;
                }
            }
            if (enter == n) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (sgn(a[i][enter]) <= 0) continue;
                Rational ratio = a[i][n] / a[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            degenerate_run = sgn(best) == 0 ? degenerate_run + 1 : 0;
            pivot(leave, enter, obj);
        }
    }

    std::size_t m, n;
    std::vector<RationalVector> a;
    std::vector<std::size_t> basis;

private:
    static void eliminate(RationalVector& row, std::size_t c, const RationalVector& prow) {
        Rational f = row[c];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
    }
};

}  // namespace

LPResult solve(const LinearProgram& lp, StepBudget* budget) {
    const std::size_t nv = lp.nvars;
    for (const auto& c : lp.constraints)
        if (c.row.size() != nv) throw DimensionError("constraint row length differs from variable count");
    if (!lp.objective.empty() && lp.objective.size() != nv) throw DimensionError("objective length mismatch");
    if (!lp.nonnegative.empty() && lp.nonnegative.size() != nv) throw DimensionError("sign vector length mismatch");

    // Column layout: split variables, then slacks, then artificials.
    std::vector<std::size_t> pos_col(nv), neg_col(nv, std::numeric_limits<std::size_t>::max());
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        pos_col[j] = ncols++;
        if (lp.nonnegative.empty() || !lp.nonnegative[j]) neg_col[j] = ncols++;
    }
    const std::size_t m = lp.constraints.size();
    std::vector<std::size_t> slack_col(m, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < m; ++i)
        if (lp.constraints[i].sense != Sense::Equal) slack_col[i] = ncols++;
    const std::size_t structural = ncols;
    const std::size_t total = structural + m;

    Tableau t(m, total);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        auto& row = t.a[i];
        for (std::size_t j = 0; j < nv; ++j) {
            if (sgn(c.row[j]) == 0) continue;
            row[pos_col[j]] = c.row[j];
            if (neg_col[j] != std::numeric_limits<std::size_t>::max()) row[neg_col[j]] = -c.row[j];
        }
        if (c.sense == Sense::LessEqual) row[slack_col[i]] = 1;
        if (c.sense == Sense::GreaterEqual) row[slack_col[i]] = -1;
        row[total] = c.rhs;
        if (sgn(c.rhs) < 0)
            for (auto& v : row) v = -v;
        row[structural + i] = 1;
        t.basis[i] = structural + i;
    }

    // Phase 1: maximize -sum(artificials).
    RationalVector obj(total + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < structural; ++j) obj[j] += t.a[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[total] += t.a[i][total];
    t.optimize(obj, structural, budget);
    LPResult result;
    if (sgn(obj[total]) != 0) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    // Drive remaining artificials out of the basis; rows where that is impossible are redundant.
    std::vector<bool> dead(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < structural) continue;
        std::size_t c = structural;
        for (std::size_t j = 0; j < structural; ++j)
            if (sgn(t.a[i][j]) != 0) {
                c = j;
                break;
            }
        if (c == structural)
            dead[i] = true;
        else
            t.pivot(i, c, obj);
    }
    if (std::find(dead.begin(), dead.end(), true) != dead.end()) {
        Tableau reduced(0, total);
        for (std::size_t i = 0; i < m; ++i) {
            if (dead[i]) continue;
            reduced.a.push_back(std::move(t.a[i]));
            reduced.basis.push_back(t.basis[i]);
        }
        reduced.m = reduced.a.size();
        t = std::move(reduced);
    }

    // Phase 2.
    RationalVector cost(total + 1);
    if (!lp.objective.empty()) {
        Rational sign = lp.maximize ? 1 : -1;
        for (std::size_t j = 0; j < nv; ++j) {
            if (sgn(lp.objective[j]) == 0) continue;
            cost[pos_col[j]] = sign * lp.objective[j];
            if (neg_col[j] != std::numeric_limits<std::size_t>::max()) cost[neg_col[j]] = -sign * lp.objective[j];
        }
    }
    RationalVector reduced_cost = cost;
    for (std::size_t i = 0; i < t.m; ++i) {
        const Rational& cb = cost[t.basis[i]];
        if (sgn(cb) == 0) continue;
        for (std::size_t j = 0; j <= total; ++j)
            if (sgn(t.a[i][j]) != 0) reduced_cost[j] -= cb * t.a[i][j];
    }
    if (!t.optimize(reduced_cost, structural, budget)) {
        result.status = LPStatus::Unbounded;
        return result;
    }

    RationalVector y(total);
    for (std::size_t i = 0; i < t.m; ++i) y[t.basis[i]] = t.a[i][total];
    result.x.assign(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) {
        result.x[j] = y[pos_col[j]];
        if (neg_col[j] != std::numeric_limits<std::size_t>::max()) result.x[j] -= y[neg_col[j]];
    }
    result.status = LPStatus::Optimal;
    result.value = lp.objective.empty() ? Rational(0) : dot(lp.objective, result.x);
    return result;
}

}  // namespace powerpoly
