#include "chowforms/formulas.hpp"

#include <algorithm>

#include "chowforms/errors.hpp"

namespace chowforms::formulas {

mpz_class binom(long m, long k) {
    if (m < 0 || k < 0 || k > m) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(k));
    return r;
}

namespace {

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_nd(long n, long d) {
    if (n < 1 || d < 1) throw DomainError("need n >= 1 and d >= 1");
}

}  // namespace

long smin(long n, long d) {
    check_nd(n, d);
    for (long s = 1;; ++s) {
        if (mpz_class(n) * s - binom(d - s + n, n) >= 0) return s;
    }
}

long sexp(long n, long d) {
    check_nd(n, d);
    mpz_class den = n + binom(d + n - 1, n - 1);
    return ceil_div(binom(d + n, n), den).get_si();
}

long sstar(long d) {
    if (d < 1) throw DomainError("sstar: need d >= 1");
    return (d + 2) / 2;  // ceil((d+1)/2)
}

mpz_class ah_rank(long n, long d) {
    check_nd(n, d);
    if (d == 2) return n + 1;
    if (d == 4 && n == 2) return 6;
    if (d == 4 && n == 3) return 10;
    if (d == 4 && n == 4) return 15;
    if (d == 3 && n == 4) return 8;
    return ceil_div(binom(n + d, d), mpz_class(n + 1));
}

bool is_defective(long n, long d) {
    check_nd(n, d);
    return smin(n, d) != sexp(n, d);
}

bool defective_classification(long n, long d) {
    if (n < 2) throw DomainError("defective_classification: need n >= 2");
    if (d < 1) throw DomainError("defective_classification: need d >= 1");
    bool non_defective = (d == 2 || d == 3) ||
                         (n == 2 && (d == 4 || d == 5 || d == 6 || d == 8));
    return !non_defective;
}

long chow_dim(long n, long s) { return n * s; }

mpz_class chow_degree(long n, long s) {
    if (n < 1 || s < 1) throw DomainError("chow_degree: need n, s >= 1");
    mpz_class r = 1;
    for (long k = 1; k <= s; ++k) r *= binom(n * k - 1, n - 1);
    return r;
}

long vsh_dim(long n, long d) {
    long s = smin(n, d);
    mpz_class v = mpz_class(n) * s - binom(d - s + n, n);
    return static_cast<long>(v.get_si());
}

mpz_class vsh_degree(long n, long d) { return chow_degree(n, smin(n, d)); }

long vhat_dim(long n, long d) {
    check_nd(n, d);
    mpz_class v = n + binom(d + n - 1, n - 1) - 1;
    mpz_class ambient = binom(d + n, n) - 1;
    return static_cast<long>(std::min(v, ambient).get_si());
}

WaringProfile profile(long n, long d) {
    WaringProfile p;
    p.n = n;
    p.d = d;
    p.smin = smin(n, d);
    p.sexp = sexp(n, d);
    p.sstar = sstar(d);
    p.ah_rank = ah_rank(n, d);
    p.defective = p.smin != p.sexp;
    p.vsh_dim = vsh_dim(n, d);
    p.vsh_degree = chow_degree(n, p.smin);
    p.chow_dim = chow_dim(n, p.smin);
    p.vhat_dim = vhat_dim(n, d);
    return p;
}

std::vector<WaringProfile> table(long n_lo, long n_hi, long d_lo, long d_hi) {
    if (n_lo > n_hi || d_lo > d_hi) throw DomainError("table: empty range");
    std::vector<WaringProfile> out;
    for (long d = d_lo; d <= d_hi; ++d)
        for (long n = n_lo; n <= n_hi; ++n) out.push_back(profile(n, d));
    return out;
}

}  // namespace chowforms::formulas
