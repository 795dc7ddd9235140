#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "powerpoly/monomial.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

struct Term {
    Exponents exponents;
    Rational coefficient;

    bool operator==(const Term& other) const {
        return exponents == other.exponents && coefficient == other.coefficient;
    }
};

// Sparse polynomial over Q. Terms are kept sorted in descending monomial order with
// no zero coefficients, so two equal polynomials have identical storage.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0, MonomialOrder order = MonomialOrder::GradedRevLex);
    Polynomial(std::size_t nvars, std::vector<Term> terms,
               MonomialOrder order = MonomialOrder::GradedRevLex);

    static Polynomial constant(std::size_t nvars, const Rational& c,
                               MonomialOrder order = MonomialOrder::GradedRevLex);
    static Polynomial variable(std::size_t nvars, std::size_t index,
                               MonomialOrder order = MonomialOrder::GradedRevLex);
    static Polynomial monomial(const Exponents& e, const Rational& c = 1,
                               MonomialOrder order = MonomialOrder::GradedRevLex);
    // (x_1 + ... + x_nvars)
    static Polynomial sum_of_variables(std::size_t nvars,
                                       MonomialOrder order = MonomialOrder::GradedRevLex);

    std::size_t nvars() const noexcept { return nvars_; }
    MonomialOrder order() const noexcept { return order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // -1 for the zero polynomial.
    int degree() const;
    int min_degree() const;
    bool is_homogeneous() const;

    const Term& leading_term() const;
    const Exponents& leading_monomial() const { return leading_term().exponents; }
    const Rational& leading_coefficient() const { return leading_term().coefficient; }
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    Polynomial with_order(MonomialOrder order) const;
    Polynomial monic() const;
    // Component of total degree d.
    Polynomial homogeneous_component(unsigned d) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // this - c * x^shift * g, the core step of division.
    void subtract_scaled(const Polynomial& g, const Rational& c, const Exponents& shift);

private:
    void canonicalize();
    void check_compatible(const Polynomial& other) const;

    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

Rational evaluate(const Polynomial& p, const RationalVector& point);
double evaluate(const Polynomial& p, const std::vector<double>& point);

// Multiply each degree-i component by (sum of variables)^(n-i).
Polynomial homogenize(const Polynomial& p, unsigned n);
// Replace the last variable by 1 - (sum of the others); result has one variable fewer.
Polynomial substitute_last(const Polynomial& p);
// Inverse direction on the simplex: replace each constant by c*(sum)^..., i.e. homogenize to
// the polynomial's own degree after adding the last variable back as 1 - sum.
Polynomial lift_to_simplex(const Polynomial& p);
Polynomial derivative(const Polynomial& p, std::size_t var);
// Variable i of the result is variable perm[i] of p.
Polynomial permute_variables(const Polynomial& p, const std::vector<std::size_t>& perm);
// Append `extra` variables that do not occur.
Polynomial extend_variables(const Polynomial& p, std::size_t extra);

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& prefix = "p");

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars,
                      MonomialOrder order = MonomialOrder::GradedRevLex);
std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
std::string to_string(const Polynomial& p);

}  // namespace powerpoly
