#include "powerpoly/vertex_enumeration.hpp"

#include <algorithm>
#include <cstdint>

namespace powerpoly {

namespace {

using IntVector = std::vector<Integer>;

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector v;
    Bits zero;  // processed constraints tight at this ray
};

// Row of the homogenized cone b*x0 - a.x >= 0, scaled to integers.
IntVector integer_row(const Halfspace& h) {
    Integer l = h.b.get_den();
    for (const auto& x : h.a) l = lcm(l, Integer(x.get_den()));
    IntVector r;
    r.reserve(h.a.size() + 1);
    Rational s = h.b * l;
    r.push_back(s.get_num());
    for (const auto& x : h.a) {
        Rational t = -x * l;
        r.push_back(t.get_num());
    }
    return r;
}

Integer idot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// Indices of a maximal linearly independent subset of rows, greedily in order.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim) {
    std::vector<RationalVector> echelon;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r) {
        RationalVector v(rows[r].begin(), rows[r].end());
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            if (sgn(v[pivots[e]]) == 0) continue;
            Rational f = v[pivots[e]] / echelon[e][pivots[e]];
            for (std::size_t j = 0; j < dim; ++j) v[j] -= f * echelon[e][j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (it == v.end()) continue;
        pivots.push_back(static_cast<std::size_t>(it - v.begin()));
        echelon.push_back(std::move(v));
        chosen.push_back(r);
    }
    return chosen;
}

// Columns of M^-1 for the square nonsingular integer matrix M, as primitive integer vectors.
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& m) {
    const std::size_t d = m.size();
    std::vector<RationalVector> aug(d, RationalVector(2 * d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = m[i][j];
        aug[i][d + i] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (sgn(aug[p][c]) == 0) ++p;
        std::swap(aug[p], aug[c]);
        Rational piv = aug[c][c];
        for (auto& x : aug[c]) x /= piv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || sgn(aug[i][c]) == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<IntVector> cols(d, IntVector(d));
    for (std::size_t j = 0; j < d; ++j) {
        Integer l = 1;
        for (std::size_t i = 0; i < d; ++i) l = lcm(l, Integer(aug[i][d + j].get_den()));
        for (std::size_t i = 0; i < d; ++i) {
            Rational t = aug[i][d + j] * l;
            cols[j][i] = t.get_num();
        }
        make_primitive(cols[j]);
    }
    return cols;
}

}  // namespace

bool lex_less(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<RationalVector> enumerate_polytope_vertices(const std::vector<Halfspace>& halfspaces, std::size_t dim,
                                                        StepBudget* budget) {
    const std::size_t d = dim + 1;
    std::vector<IntVector> rows;
    for (const auto& h : halfspaces) {
        if (h.a.size() != dim) throw DimensionError("halfspace dimension mismatch");
        if (std::all_of(h.a.begin(), h.a.end(), [](const Rational& x) { return sgn(x) == 0; })) {
            if (sgn(h.b) < 0) return {};
            continue;
        }
        rows.push_back(integer_row(h));
    }
    // x0 >= 0 keeps the homogenization on the right side.
    IntVector x0(d, 0);
    x0[0] = 1;
    rows.push_back(x0);
    const std::size_t nrows = rows.size();

    std::vector<std::size_t> basis_rows = independent_rows(rows, d);
    if (basis_rows.size() < d) throw InvalidArgument("polyhedron is unbounded (constraint matrix is rank deficient)");

    std::vector<IntVector> m;
    for (auto r : basis_rows) m.push_back(rows[r]);
    std::vector<IntVector> cols = inverse_columns(m);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        Ray r{cols[j], Bits(nrows)};
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) r.zero.set(basis_rows[i]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(nrows, false);
    for (auto r : basis_rows) processed[r] = true;
    std::size_t processed_count = d;

    for (std::size_t c = 0; c < nrows; ++c) {
        if (processed[c]) continue;
        const IntVector& row = rows[c];
        std::vector<std::size_t> pos, neg, zer;
        std::vector<Integer> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = idot(row, rays[i].v);
            int s = sgn(val[i]);
            (s > 0 ? pos : s < 0 ? neg : zer).push_back(i);
        }
        processed[c] = true;
        ++processed_count;
        if (neg.empty()) {
            for (auto i : zer) rays[i].zero.set(c);
            continue;
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (auto i : pos) next.push_back(rays[i]);
        for (auto i : zer) {
            next.push_back(rays[i]);
            next.back().zero.set(c);
        }
        // Adjacent (pos, neg) pairs share a face of codimension 2 in the current cone.
        const std::size_t needed = d >= 2 ? d - 2 : 0;
        for (auto p : pos) {
            for (auto q : neg) {
                tick(budget, "double description pair test");
                Bits common = rays[p].zero & rays[q].zero;
                if (common.count() < needed) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr{IntVector(d), common};
                for (std::size_t j = 0; j < d; ++j) nr.v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
                make_primitive(nr.v);
                nr.zero.set(c);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    (void)processed_count;

    std::vector<RationalVector> vertices;
    for (const auto& r : rays) {
        if (sgn(r.v[0]) == 0) throw InvalidArgument("polyhedron is unbounded");
        RationalVector x(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = Rational(r.v[j + 1], r.v[0]);
            x[j].canonicalize();
        }
        vertices.push_back(std::move(x));
    }
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace powerpoly
