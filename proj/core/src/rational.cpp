#include "powerpoly/rational.hpp"

#include <cctype>
#include <string>

#include "powerpoly/errors.hpp"

namespace powerpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_decimal(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6)
            throw ParseError("malformed exponent in '" + std::string(text) + "'", e);
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        body = body.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    auto dot = body.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(body);
    } else {
        digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
        scale = static_cast<long>(body.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("malformed number '" + std::string(text) + "'", 0);
    Rational r{Integer(digits, 10)};
    long shift = exponent - scale;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0)
        r /= ten_pow;
    else
        r *= ten_pow;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number", 0);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);

    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num)) throw ParseError("malformed numerator in '" + std::string(text) + "'", 0);
    if (!all_digits(den))
        throw ParseError("malformed denominator in '" + std::string(text) + "'", slash + 1);
    Integer d(std::string{den}, 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational r(Integer(std::string{num}, 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) {
    constexpr std::size_t kMantissaBits = 53;
    if (mpz_sizeinbase(r.get_num_mpz_t(), 2) <= kMantissaBits && mpz_sizeinbase(r.get_den_mpz_t(), 2) <= kMantissaBits)
        return r.get_num().get_d() / r.get_den().get_d();
    return r.get_d();
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    Integer a = sqrt(num);
    Integer b = sqrt(den);
    root = Rational(a, b);
    root.canonicalize();
    return true;
}

}  // namespace powerpoly
