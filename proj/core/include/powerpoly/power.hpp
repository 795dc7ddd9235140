#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powerpoly/monomial.hpp"
#include "powerpoly/polynomial.hpp"
#include "powerpoly/rational.hpp"

namespace powerpoly {

// Randomized test on count vectors of size n over k categories. Values are stored in the
// order of compositions(n, k): lexicographically descending counts.
class TestFunction {
public:
    TestFunction(unsigned n, std::size_t k, std::vector<Rational> values);

    static TestFunction constant(unsigned n, std::size_t k, const Rational& c);

    unsigned n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<Exponents>& points() const noexcept { return points_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& operator()(const Exponents& x) const;

    bool operator==(const TestFunction& other) const {
        return n_ == other.n_ && k_ == other.k_ && values_ == other.values_;
    }

private:
    unsigned n_;
    std::size_t k_;
    std::vector<Exponents> points_;
    std::vector<Rational> values_;
};

// Position of x in compositions(total_degree(x), x.size()).
std::size_t composition_rank(const Exponents& x);

struct PowerPolynomial {
    unsigned n = 0;
    std::size_t k = 0;
    Polynomial poly;
};

struct BoxCheck {
    bool ok = true;
    std::string reason;
    Exponents x;          // first violating multiindex
    Rational coefficient; // its coefficient
    Integer bound;        // multinomial(n, x)
};

// Every coefficient of a homogeneous degree-n polynomial in k variables lies in [0, multinomial(n, x)].
BoxCheck box_check(const Polynomial& p, unsigned n, std::size_t k);

// Validates with box_check and throws InvalidArgument on failure.
PowerPolynomial make_power_polynomial(const Polynomial& p, unsigned n, std::size_t k);

PowerPolynomial test_to_power(const TestFunction& phi);
TestFunction recover_test(const PowerPolynomial& beta);

struct NormalizedPower {
    PowerPolynomial power;
    Rational a;
    Rational b;
    Rational size() const { return a * b; }
};

// beta* = a (beta~ + b (sum pi)^n). beta~ may be given in k variables or in the first k-1.
NormalizedPower normalize_to_power(const Polynomial& beta_tilde, unsigned n, std::size_t k);

// Bring a polynomial in k or k-1 variables to a homogeneous degree-n form in k variables
// that agrees with it on the simplex.
Polynomial to_simplex_form(const Polynomial& p, unsigned n, std::size_t k);

Rational exact_power(const TestFunction& phi, const RationalVector& pi);

struct MonteCarloEstimate {
    double estimate = 0;
    double standard_error = 0;
    std::uint64_t reps = 0;
};

// Multinomial draws by inverse CDF with std::mt19937_64 and 53-bit uniforms (x >> 11) * 2^-53,
// followed by a Bernoulli(phi(x)) draw from the same stream.
MonteCarloEstimate monte_carlo_power(const TestFunction& phi, const std::vector<double>& pi, std::uint64_t reps,
                                     std::uint64_t seed);

// Average over the permutation group generated by perms.
Polynomial symmetrize(const Polynomial& beta, const std::vector<std::vector<std::size_t>>& perms);
std::vector<std::vector<std::size_t>> generate_group(std::size_t nvars, const std::vector<std::vector<std::size_t>>& perms);

// k = 3 test rejecting when max(x1, x2) > n t + sqrt(n) c, decided exactly over integer counts.
TestFunction max_statistic_test(unsigned n, const Rational& t, const Rational& c);

struct PowerGrid {
    std::size_t k = 0;
    std::vector<std::vector<double>> rows;  // pi_1..pi_{k-1}, power
};

// Uniform grid with `resolution` nodes per axis on [0, upper]^(k-1), first coordinate slowest;
// nodes outside the simplex are skipped. Threads from POWERPOLY_THREADS (default 1).
PowerGrid power_grid(const TestFunction& phi, std::size_t resolution, const Rational& upper);
double power_at(const TestFunction& phi, const std::vector<double>& pi);

void write_csv(std::ostream& out, const PowerGrid& grid);
std::string format_double(double x);

}  // namespace powerpoly
