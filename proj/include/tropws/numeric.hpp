#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace tropws {

using Int = mpz_class;
using Rat = mpq_class;

// C(m,k) with the conventions used throughout the bound formulas:
// C(m,0) = 1 for every m (empty product), 0 whenever k < 0 or m < k.
Int binomial(long m, long k);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, unsigned long e);

// Scale a rational vector to the coprime integer vector with the same
// direction. The zero vector maps to itself.
std::vector<Int> primitive(const std::vector<Rat>& v);
std::vector<Int> primitive_int(const std::vector<Int>& v);

std::string rat_string(const Rat& q); // "p" or "p/q"

} // namespace tropws
