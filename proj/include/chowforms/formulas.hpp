#pragma once

#include <vector>

#include <gmpxx.h>

namespace chowforms::formulas {

// Binomial with the convention C(m, k) = 0 whenever m < k or k < 0.
mpz_class binom(long m, long k);

// Minimal number of codimension-one summands for the generic degree-d form
// in n+1 variables: min{ s : n*s - C(d-s+n, n) >= 0 }.
long smin(long n, long d);

// Expected number of summands from the secant dimension count.
long sexp(long n, long d);

// Gorenstein socle bound ceil((d+1)/2); a lower bound for smin.
long sstar(long d);

// Alexander-Hirschowitz rank of the generic form: the ceiling formula with
// the classical exception list.
mpz_class ah_rank(long n, long d);

bool is_defective(long n, long d);
// Closed-form classification; requires n >= 2.
bool defective_classification(long n, long d);

long chow_dim(long n, long s);  // n * s
// deg Delta_{n,s} = prod_{k=1..s} C(n*k - 1, n - 1).
mpz_class chow_degree(long n, long s);

// dim / deg of the decomposition scheme at s = smin(n, d).
long vsh_dim(long n, long d);
mpz_class vsh_degree(long n, long d);

// Projective dimension of the variety of codimension-one forms,
// min(n + C(d+n-1, n-1) - 1, dim P S_d).
long vhat_dim(long n, long d);

struct WaringProfile {
    long n = 0, d = 0;
    long smin = 0, sexp = 0, sstar = 0;
    mpz_class ah_rank;
    bool defective = false;
    long vsh_dim = 0;
    mpz_class vsh_degree;
    long chow_dim = 0;
    long vhat_dim = 0;
};

WaringProfile profile(long n, long d);

// Profiles for the full grid, rows sorted by (d, n).
std::vector<WaringProfile> table(long n_lo, long n_hi, long d_lo, long d_hi);

}  // namespace chowforms::formulas
