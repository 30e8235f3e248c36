#include "tropws/numeric.hpp"
#include "tropws/error.hpp"

namespace tropws {

Int binomial(long m, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m < k) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return r;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rpow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    r.canonicalize();
    return r;
}

std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(den);
        w[i] = s.get_num(); // denominator is 1 after scaling
    }
    return primitive_int(w);
}

std::vector<Int> primitive_int(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v; // zero vector
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

std::string rat_string(const Rat& q) {
    return q.get_str();
}

} // namespace tropws
