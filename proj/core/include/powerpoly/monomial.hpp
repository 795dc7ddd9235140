#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerpoly/rational.hpp"

namespace powerpoly {

using Exponents = std::vector<std::uint32_t>;

enum class MonomialOrder { GradedLex, GradedRevLex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);

unsigned total_degree(const Exponents& e);

// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
int compare(const Exponents& a, const Exponents& b, MonomialOrder order);

inline bool less(const Exponents& a, const Exponents& b, MonomialOrder order) {
    return compare(a, b, order) < 0;
}

bool divides(const Exponents& a, const Exponents& b);
Exponents multiply(const Exponents& a, const Exponents& b);
Exponents divide(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);

// All exponent vectors of total degree n in k variables, lexicographically descending:
// (n,0,...,0) first and (0,...,0,n) last.
std::vector<Exponents> compositions(unsigned n, unsigned k);

// n! / (x_1! ... x_k!)
Integer multinomial(const Exponents& x);

}  // namespace powerpoly
