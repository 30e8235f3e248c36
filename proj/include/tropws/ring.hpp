#pragma once
#include <memory>
#include <string>
#include <vector>
#include "tropws/numeric.hpp"

namespace tropws {

// Ambient polynomial ring: an ordered list of variable names.
struct Ring {
    std::vector<std::string> vars;
    size_t n() const { return vars.size(); }
    int index_of(const std::string& name) const;
    bool same_as(const Ring& o) const { return vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
RingPtr make_ring(const std::string& comma_separated); // "x,y,z"

// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
Rat mono_weight(const std::vector<Rat>& w, const Monomial& m);

// Canonical storage order: graded reverse lexicographic with the first
// ring variable largest. Algebraic term orders live in TermOrder; this
// one only fixes serialization and container layout.
bool grevlex_less(const Monomial& a, const Monomial& b);
bool grevlex_greater(const Monomial& a, const Monomial& b);

} // namespace tropws
