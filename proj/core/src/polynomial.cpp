#include "powerpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "powerpoly/errors.hpp"

namespace powerpoly {

Polynomial::Polynomial(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms, MonomialOrder order)
    : nvars_(nvars), order_(order), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.exponents.size() != nvars_)
            throw DimensionError("term has " + std::to_string(t.exponents.size()) +
                                 " exponents, expected " + std::to_string(nvars_));
    canonicalize();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, MonomialOrder order) {
    Polynomial p(nvars, order);
    if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, MonomialOrder order) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(e, 1, order);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c, MonomialOrder order) {
    Polynomial p(e.size(), order);
    if (c != 0) p.terms_.push_back({e, c});
    return p;
}

Polynomial Polynomial::sum_of_variables(std::size_t nvars, MonomialOrder order) {
    Polynomial p(nvars, order);
    for (std::size_t i = 0; i < nvars; ++i) {
        Exponents e(nvars, 0);
        e[i] = 1;
        p.terms_.push_back({e, 1});
    }
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize() {
    const MonomialOrder o = order_;
    std::sort(terms_.begin(), terms_.end(), [o](const Term& a, const Term& b) {
        return compare(a.exponents, b.exponents, o) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exponents == t.exponents)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coefficient == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                             std::to_string(other.nvars_) + " variables");
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(total_degree(t.exponents)));
    return d;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) return -1;
    int d = static_cast<int>(total_degree(terms_[0].exponents));
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(total_degree(t.exponents)));
    return d;
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || degree() == min_degree();
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
}

Rational Polynomial::coefficient(const Exponents& e) const {
    const MonomialOrder o = order_;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [o](const Term& t, const Exponents& x) {
        return compare(t.exponents, x, o) > 0;
    });
    if (it != terms_.end() && it->exponents == e) return it->coefficient;
    return 0;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Polynomial Polynomial::with_order(MonomialOrder order) const {
    Polynomial p(nvars_, order);
    p.terms_ = terms_;
    if (order != order_) p.canonicalize();
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational lc = leading_coefficient();
    return *this / lc;
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
    Polynomial p(nvars_, order_);
    for (const auto& t : terms_)
        if (total_degree(t.exponents) == d) p.terms_.push_back(t);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    const Polynomial& rhs = other.order_ == order_ ? other : other.with_order(order_);
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        int c = a == terms_.end() ? -1 : b == rhs.terms_.end() ? 1 : compare(a->exponents, b->exponents, order_);
        if (c > 0) {
            out.push_back(std::move(*a++));
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Rational s = a->coefficient + b->coefficient;
            if (s != 0) out.push_back({std::move(a->exponents), s});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            prod.push_back({multiply(s.exponents, t.exponents), s.coefficient * t.coefficient});
    return Polynomial(a.nvars_, std::move(prod), a.order_);
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw InvalidArgument("division of polynomial by zero");
    for (auto& t : terms_) t.coefficient /= c;
    return *this;
}

void Polynomial::subtract_scaled(const Polynomial& g, const Rational& c, const Exponents& shift) {
    Polynomial scaled(nvars_, order_);
    scaled.terms_.reserve(g.terms_.size());
    // Multiplying by a monomial preserves the order, so no re-sort is needed.
    for (const auto& t : g.terms_) scaled.terms_.push_back({multiply(t.exponents, shift), -c * t.coefficient});
    *this += scaled;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(p.nvars(), 1, p.order());
    Polynomial base = p;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Rational evaluate(const Polynomial& p, const RationalVector& point) {
    if (point.size() != p.nvars())
        throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                             std::to_string(p.nvars()) + " variables");
    Rational sum = 0;
    Rational mono;
    mpq_class power;
    for (const auto& t : p.terms()) {
        mono = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exponents[i]);
            mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exponents[i]);
            mono *= power;
        }
        sum += mono;
    }
    return sum;
}

double evaluate(const Polynomial& p, const std::vector<double>& point) {
    if (point.size() != p.nvars()) throw DimensionError("point dimension mismatch");
    double sum = 0;
    for (const auto& t : p.terms()) {
        double mono = to_double(t.coefficient);
        for (std::size_t i = 0; i < point.size(); ++i)
            if (t.exponents[i]) mono *= std::pow(point[i], static_cast<int>(t.exponents[i]));
        sum += mono;
    }
    return sum;
}

Polynomial homogenize(const Polynomial& p, unsigned n) {
    if (p.degree() > static_cast<int>(n))
        throw InvalidArgument("cannot homogenize degree " + std::to_string(p.degree()) + " polynomial to degree " +
                              std::to_string(n));
    const Polynomial s = Polynomial::sum_of_variables(p.nvars(), p.order());
    std::vector<Polynomial> s_pow{Polynomial::constant(p.nvars(), 1, p.order())};
    for (unsigned i = 1; i <= n; ++i) s_pow.push_back(s_pow.back() * s);
    Polynomial out(p.nvars(), p.order());
    for (int d = 0; d <= p.degree(); ++d) {
        Polynomial comp = p.homogeneous_component(static_cast<unsigned>(d));
        if (!comp.is_zero()) out += comp * s_pow[n - static_cast<unsigned>(d)];
    }
    return out;
}

Polynomial substitute_last(const Polynomial& p) {
    const std::size_t k = p.nvars();
    if (k < 2) throw DimensionError("substitute_last needs at least two variables");
    Polynomial last = Polynomial::constant(k - 1, 1, p.order()) - Polynomial::sum_of_variables(k - 1, p.order());
    std::vector<Polynomial> last_pow{Polynomial::constant(k - 1, 1, p.order())};
    std::vector<Term> plain;
    Polynomial out(k - 1, p.order());
    for (const auto& t : p.terms()) {
        Exponents head(t.exponents.begin(), t.exponents.end() - 1);
        unsigned e = t.exponents.back();
        if (e == 0) {
            plain.push_back({std::move(head), t.coefficient});
            continue;
        }
        while (last_pow.size() <= e) last_pow.push_back(last_pow.back() * last);
        out += Polynomial::monomial(head, t.coefficient, p.order()) * last_pow[e];
    }
    out += Polynomial(k - 1, std::move(plain), p.order());
    return out;
}

Polynomial lift_to_simplex(const Polynomial& p) {
    Polynomial extended = extend_variables(p, 1);
    return homogenize(extended, static_cast<unsigned>(std::max(p.degree(), 0)));
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw DimensionError("derivative variable out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.exponents[var] == 0) continue;
        Term d = t;
        d.coefficient *= t.exponents[var];
        d.exponents[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(p.nvars(), std::move(out), p.order());
}

Polynomial permute_variables(const Polynomial& p, const std::vector<std::size_t>& perm) {
    if (perm.size() != p.nvars()) throw DimensionError("permutation length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (auto v : perm) {
        if (v >= perm.size() || seen[v]) throw InvalidArgument("not a permutation");
        seen[v] = true;
    }
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exponents e(p.nvars());
        for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.exponents[perm[i]];
        out.push_back({std::move(e), t.coefficient});
    }
    return Polynomial(p.nvars(), std::move(out), p.order());
}

Polynomial extend_variables(const Polynomial& p, std::size_t extra) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exponents e = t.exponents;
        e.resize(p.nvars() + extra, 0);
        out.push_back({std::move(e), t.coefficient});
    }
    return Polynomial(p.nvars() + extra, std::move(out), p.order());
}

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, MonomialOrder order)
        : text_(text), vars_(vars), order_(order) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
        }
        return Polynomial(vars_.size(), std::move(terms), order_);
    }

private:
    Term parse_term() {
        Term t{Exponents(vars_.size(), 0), 1};
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = parse_coefficient();
            have_factor = true;
        }
        while (true) {
            skip_ws();
            std::size_t save = pos_;
            if (peek() == '*') {
                if (!have_factor) throw ParseError("unexpected '*'", pos_);
                ++pos_;
                skip_ws();
                if (!is_ident_start(peek())) throw ParseError("expected variable after '*'", pos_);
            }
            if (!is_ident_start(peek())) {
                pos_ = save;
                break;
            }
            std::size_t start = pos_;
            std::string name = parse_identifier();
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
            unsigned e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_uint();
            }
            t.exponents[static_cast<std::size_t>(it - vars_.begin())] += e;
            have_factor = true;
        }
        if (!have_factor) throw ParseError("expected a term", pos_);
        return t;
    }

    Rational parse_coefficient() {
        Integer num(digits());
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            Integer den(digits());
            if (den == 0) throw ParseError("zero denominator", den_pos);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    unsigned parse_uint() {
        std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 6) throw ParseError("exponent too large", start);
        return static_cast<unsigned>(std::stoul(d));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string parse_identifier() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars, MonomialOrder order) {
    return Parser(text, vars, order).parse();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.nvars()) throw DimensionError("variable name count mismatch");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational mag = abs(t.coefficient);
        if (first)
            out += t.coefficient < 0 ? "-" : "";
        else
            out += t.coefficient < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_variable_names(p.nvars())); }

}  // namespace powerpoly
