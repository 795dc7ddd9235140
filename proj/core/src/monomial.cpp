#include "powerpoly/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "powerpoly/errors.hpp"

namespace powerpoly {

std::string to_string(MonomialOrder order) {
    return order == MonomialOrder::GradedLex ? "grlex" : "grevlex";
}

MonomialOrder parse_order(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "grlex" || s == "gradedlex" || s == "glex") return MonomialOrder::GradedLex;
    if (s == "grevlex" || s == "gradedrevlex" || s == "drl") return MonomialOrder::GradedRevLex;
    throw InvalidArgument("unknown monomial order '" + name + "' (expected grlex or grevlex)");
}

unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

int compare(const Exponents& a, const Exponents& b, MonomialOrder order) {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (order == MonomialOrder::GradedLex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    // Reverse lex tie-break: the last differing variable decides, smaller exponent wins.
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents multiply(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents divide(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

namespace {

void compose(unsigned remaining, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        cur[pos] = v;
        compose(remaining - v, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<Exponents> compositions(unsigned n, unsigned k) {
    std::vector<Exponents> out;
    if (k == 0) return out;
    Exponents cur(k, 0);
    compose(n, 0, cur, out);
    return out;
}

Integer multinomial(const Exponents& x) {
    Integer r = factorial(total_degree(x));
    for (auto xi : x) r /= factorial(xi);
    return r;
}

}  // namespace powerpoly
