#include "tropws/bounds.hpp"
#include "tropws/error.hpp"

namespace tropws {

namespace {

void check_eq2_domain(long d, long n, long r) {
    if (r == 0)
        throw domain_error("r = 0 (zero-dimensional case) is outside this bound's domain");
    if (r < 0 || r >= n) throw domain_error("need n > r >= 1");
    if (d < 1) throw domain_error("need d >= 1");
    if (r > 64 || n - r > 4096)
        throw domain_error("parameters too large for exact evaluation");
}

} // namespace

Rat eq2_mayr_ritscher(long d, long n, long r) {
    check_eq2_domain(d, n, r);
    Rat base = (rpow(Rat(d), static_cast<unsigned long>(n - r)) + d) / 2;
    Int expo = ipow(2, static_cast<unsigned long>(r - 1));
    if (!expo.fits_ulong_p()) throw domain_error("exponent 2^(r-1) too large");
    return 2 * rpow(base, expo.get_ui());
}

BoundReport eq3_tropical_basis_bound(long deg_u, long alpha, long n, long d, long r) {
    check_eq2_domain(d, n, r);
    if (deg_u < 1) throw domain_error("need deg_u >= 1");
    if (alpha < 0) throw domain_error("need alpha >= 0");
    Rat eq2 = eq2_mayr_ritscher(d, n, r);

    BoundReport rep;
    rep.inputs = {{"deg_u", deg_u}, {"alpha", alpha}, {"n", n}, {"d", d}, {"r", r}};
    Rat first = std::max(Rat(deg_u), Rat(Rat(alpha) * n));
    rep.chain.emplace_back("max(deg_u, alpha*n)", first);
    rep.chain.emplace_back("n*deg_u", Rat(deg_u) * n);
    rep.chain.emplace_back("2n*((d^(n-r)+d)/2)^(2^(r-1))", Rat(n) * eq2);
    rep.consistent = Rat(deg_u) <= eq2 && alpha <= deg_u;
    if (!rep.consistent)
        rep.note = "inputs exceed the degree bound for a universal basis; "
                   "chain monotonicity not asserted";
    else
        for (size_t i = 1; i < rep.chain.size(); ++i)
            if (rep.chain[i - 1].second > rep.chain[i].second)
                throw internal_error("bound chain failed to be monotone");
    return rep;
}

Int gb_cardinality_bound(long e, long n) {
    if (e < 0 || n < 1) throw domain_error("need e >= 0 and n >= 1");
    return binomial(e + n - 1, n - 1);
}

Int eq4_unimodular_fvector(long d, long n, long j) {
    if (d < 1 || n < 2 || j < 0 || j > n - 1)
        throw domain_error("need d >= 1, n >= 2, 0 <= j <= n-1");
    Int sum = 0;
    for (long i = 0; i <= j; ++i) {
        Int term = binomial(j, i) * binomial(d * i + d + n - 1, n - 1);
        if ((i + j) % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Int eq5_hypersurface_bound(long d, long n, long j) {
    if (d < 1 || n < 2 || j < 0 || j > n - 1)
        throw domain_error("need d >= 1, n >= 2, 0 <= j <= n-1");
    Int sum = 0;
    for (long i = 1; i <= n - j; ++i) {
        Int term = binomial(n - j - 1, i - 1) * binomial(d * i + n - 1, n - 1);
        if ((n + i - j) % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Int prop_variety_fvector_bound(long s, long d, long n, long j) {
    if (s < 1 || d < 1) throw domain_error("need s >= 1 and d >= 1");
    return eq5_hypersurface_bound(s * d, n, j);
}

Int lambda0_vertex_bound(long sd, long n) {
    if (sd < 1 || n < 3) throw domain_error("need sd >= 1 and n >= 3");
    Int sum = 0;
    for (long i = 0; i <= sd - 2; ++i) sum += 2 * binomial(i + n - 3, i);
    for (long i = 0; i <= n - 3; ++i) sum += (n - i) * binomial(i + sd - 2, i);
    return sum;
}

PlueckerBound pluecker_degree_bound(long D, long N) {
    if (D < 2 || D >= N) throw domain_error("need 2 <= D < N");
    Int nn = binomial(N, D);
    if (!nn.fits_slong_p() || nn.get_si() > 100000)
        throw domain_error("binomial(N,D) too large for exact evaluation");
    long n = nn.get_si();
    long r = (N - D) * D + 1;
    if (n <= r) throw domain_error("need binomial(N,D) > (N-D)*D + 1");
    long outer = N * D - D * D;
    if (outer > 40) throw domain_error("exponent 2^(ND-D^2) too large for exact evaluation");
    Int base = ipow(2, static_cast<unsigned long>(n - N * D + D * D - 2)) + 1;
    Int value = 2 * nn * ipow(base, 1UL << outer);
    return PlueckerBound{n, r, value};
}

} // namespace tropws
