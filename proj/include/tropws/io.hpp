#pragma once
#include <iosfwd>
#include <string>
#include "tropws/groebner.hpp"

namespace tropws {

// Ideal file format: first line `ring x,y,z` with the ordered variable
// list; every further nonempty line not starting with `#` is one
// polynomial in the standard grammar.
Ideal read_ideal_file(const std::string& path);
Ideal read_ideal(std::istream& in, const std::string& name);

// "1,0,0" or "1/2,-3,0" -> weight vector
WeightVector parse_weight(const std::string& text, size_t n);

} // namespace tropws
