#include "tropws/ring.hpp"
#include "tropws/error.hpp"

#include <algorithm>
#include <sstream>

namespace tropws {

int Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    if (vars.empty()) throw domain_error("ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw domain_error("duplicate variable name: " + vars[i]);
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

RingPtr make_ring(const std::string& comma_separated) {
    std::vector<std::string> vars;
    std::string cur;
    for (char ch : comma_separated) {
        if (ch == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) vars.push_back(cur);
    return make_ring(std::move(vars));
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw internal_error("mono_div: not divisible");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Rat mono_weight(const std::vector<Rat>& w, const Monomial& m) {
    Rat s = 0;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) s += w[i] * m[i];
    return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // smaller = the one whose last nonzero difference entry is positive
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    return grevlex_less(b, a);
}

} // namespace tropws
