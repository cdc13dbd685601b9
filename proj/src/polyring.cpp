#include "chowforms/polyring.hpp"

#include <cassert>
#include <numeric>

namespace chowforms::polyring {

int MultiIndex::degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
}

namespace {

// Small binomial for basis indexing; desk-scale arguments only.
std::size_t binom_sz(long m, long k) {
    if (k < 0 || m < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    unsigned long long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(m - k + i) /
            static_cast<unsigned long long>(i);
    }
    return static_cast<std::size_t>(r);
}

void gen_indices(int vars_left, int deg_left, std::vector<int>& cur,
                 std::vector<MultiIndex>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(MultiIndex{cur});
        cur.pop_back();
        return;
    }
    for (int t = deg_left; t >= 0; --t) {
        cur.push_back(t);
        gen_indices(vars_left - 1, deg_left - t, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int n, int d) {
    if (n < 0 || d < 0) throw DomainError("monomial_basis: bad arguments");
    std::vector<MultiIndex> out;
    out.reserve(monomial_count(n, d));
    std::vector<int> cur;
    gen_indices(n + 1, d, cur, out);
    return out;
}

std::size_t monomial_count(int n, int d) { return binom_sz(d + n, n); }

std::size_t monomial_index(int n, const MultiIndex& mi) {
    assert(static_cast<int>(mi.e.size()) == n + 1);
    std::size_t idx = 0;
    int deg = mi.degree();
    for (int i = 0; i < n; ++i) {
        const int m = n - i;  // variables after position i
        for (int t = deg; t > mi.e[i]; --t)
            idx += binom_sz(deg - t + m - 1, m - 1);
        deg -= mi.e[i];
    }
    return idx;
}

Form::Form(Field field, int n, int degree, Ring ring)
    : field_(std::move(field)),
      n_(n),
      degree_(degree),
      ring_(ring),
      coeffs_(monomial_count(n, degree), Scalar(0)) {}

Form::Form(Field field, int n, int degree, Ring ring,
           std::vector<Scalar> coeffs)
    : field_(std::move(field)),
      n_(n),
      degree_(degree),
      ring_(ring),
      coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != monomial_count(n, degree))
        throw DomainError("Form: coefficient count does not match (n, d)");
}

bool Form::is_zero() const {
    for (const Scalar& c : coeffs_)
        if (!Field::is_zero(c)) return false;
    return true;
}

std::string Form::to_string() const {
    const char* var = ring_ == Ring::S ? "X" : "D";
    auto basis = monomial_basis(n_, degree_);
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (Field::is_zero(coeffs_[i])) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].get_str();
        for (int v = 0; v <= n_; ++v) {
            int e = basis[i].e[v];
            if (e == 0) continue;
            out += "*" + std::string(var) + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

LinearForm::LinearForm(Field field, Ring ring, std::vector<Scalar> coeffs)
    : field_(std::move(field)), ring_(ring), coeffs_(std::move(coeffs)) {
    std::size_t p = 0;
    while (p < coeffs_.size() && Field::is_zero(coeffs_[p])) ++p;
    if (p == coeffs_.size())
        throw DomainError("LinearForm: all coefficients are zero");
    Scalar ipiv = field_.inv(coeffs_[p]);
    for (std::size_t j = p; j < coeffs_.size(); ++j)
        coeffs_[j] = field_.mul(coeffs_[j], ipiv);
}

Form LinearForm::as_form() const {
    return Form(field_, n(), 1, ring_, coeffs_);
}

std::string LinearForm::to_string() const { return as_form().to_string(); }

bool proportional(const LinearForm& a, const LinearForm& b) {
    // both are normalized, so proportionality is equality
    return a.coeffs() == b.coeffs();
}

bool pairwise_non_proportional(std::span<const LinearForm> ls) {
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (proportional(ls[i], ls[j])) return false;
    return true;
}

namespace {

void check_compatible(const Form& a, const Form& b, bool same_ring) {
    if (a.n() != b.n())
        throw DegreeMismatch("forms live in different variable counts");
    if (a.field() != b.field())
        throw FieldMismatch("forms live over different fields");
    if (same_ring && a.ring() != b.ring())
        throw DomainError("forms live in different rings");
}

}  // namespace

Form add(const Form& a, const Form& b) {
    check_compatible(a, b, true);
    if (a.degree() != b.degree())
        throw DegreeMismatch("add: degrees differ");
    std::vector<Scalar> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.field().add(c[i], b.coeff(i));
    return Form(a.field(), a.n(), a.degree(), a.ring(), std::move(c));
}

Form sub(const Form& a, const Form& b) {
    return add(a, scale(a.field().from_int(-1), b));
}

Form scale(const Scalar& c, const Form& a) {
    std::vector<Scalar> out(a.coeffs());
    for (Scalar& x : out) x = a.field().mul(c, x);
    return Form(a.field(), a.n(), a.degree(), a.ring(), std::move(out));
}

Form apply(const Form& D, const Form& f) {
    if (D.ring() != Ring::T || f.ring() != Ring::S)
        throw DomainError("apply: expected D in T and f in S");
    check_compatible(D, f, false);
    const int s = D.degree(), d = f.degree(), n = f.n();
    if (s > d) throw DegreeMismatch("apply: deg D exceeds deg f");
    const Field& F = f.field();
    if (F.is_prime_field() && F.modulus() <= d)
        throw DomainError(
            "apply: prime modulus must exceed the degree so differentiation "
            "constants stay units");

    auto db = monomial_basis(n, s);
    auto fb = monomial_basis(n, d);
    Form out(F, n, d - s, f.ring());
    std::vector<Scalar> c(out.coeffs());
    for (std::size_t bi = 0; bi < db.size(); ++bi) {
        if (Field::is_zero(D.coeff(bi))) continue;
        const auto& beta = db[bi].e;
        for (std::size_t ai = 0; ai < fb.size(); ++ai) {
            if (Field::is_zero(f.coeff(ai))) continue;
            const auto& alpha = fb[ai].e;
            mpz_class fall = 1;
            bool ok = true;
            MultiIndex gamma{std::vector<int>(n + 1)};
            for (int v = 0; v <= n && ok; ++v) {
                if (alpha[v] < beta[v]) {
                    ok = false;
                    break;
                }
                gamma.e[v] = alpha[v] - beta[v];
                for (int t = alpha[v]; t > alpha[v] - beta[v]; --t) fall *= t;
            }
            if (!ok) continue;
            Scalar term = F.mul(F.mul(D.coeff(bi), f.coeff(ai)),
                                F.from_mpz(fall));
            std::size_t gi = monomial_index(n, gamma);
            c[gi] = F.add(c[gi], term);
        }
    }
    return Form(F, n, d - s, f.ring(), std::move(c));
}

Form multiply(const Form& a, const Form& b) {
    check_compatible(a, b, true);
    const int n = a.n();
    const Field& F = a.field();
    auto ab = monomial_basis(n, a.degree());
    auto bb = monomial_basis(n, b.degree());
    Form out(F, n, a.degree() + b.degree(), a.ring());
    std::vector<Scalar> c(out.coeffs());
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (Field::is_zero(a.coeff(i))) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (Field::is_zero(b.coeff(j))) continue;
            MultiIndex g{std::vector<int>(n + 1)};
            for (int v = 0; v <= n; ++v) g.e[v] = ab[i].e[v] + bb[j].e[v];
            std::size_t gi = monomial_index(n, g);
            c[gi] = F.add(c[gi], F.mul(a.coeff(i), b.coeff(j)));
        }
    }
    return Form(F, n, a.degree() + b.degree(), a.ring(), std::move(c));
}

Form product(std::span<const Form> factors) {
    if (factors.empty()) throw DomainError("product: no factors");
    Form acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = multiply(acc, factors[i]);
    return acc;
}

Form product(std::span<const LinearForm> factors) {
    if (factors.empty()) throw DomainError("product: no factors");
    Form acc = factors[0].as_form();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = multiply(acc, factors[i].as_form());
    return acc;
}

Form power(const LinearForm& l, int d) {
    if (d == 0) {
        return Form(l.field(), l.n(), 0, l.ring(),
                    std::vector<Scalar>{l.field().one()});
    }
    Form acc = l.as_form();
    for (int i = 1; i < d; ++i) acc = multiply(acc, l.as_form());
    return acc;
}

Scalar evaluate(const Form& f, std::span<const Scalar> point) {
    if (point.size() != static_cast<std::size_t>(f.n() + 1))
        throw DomainError("evaluate: wrong point length");
    const Field& F = f.field();
    auto basis = monomial_basis(f.n(), f.degree());
    Scalar acc(0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (Field::is_zero(f.coeff(i))) continue;
        Scalar term = f.coeff(i);
        for (int v = 0; v <= f.n(); ++v)
            for (int e = 0; e < basis[i].e[v]; ++e)
                term = F.mul(term, point[v]);
        acc = F.add(acc, term);
    }
    return acc;
}

Scalar pair_linear(const LinearForm& D, const LinearForm& l) {
    if (D.n() != l.n()) throw DegreeMismatch("pair_linear: n differs");
    const Field& F = D.field();
    Scalar acc(0);
    for (int v = 0; v <= D.n(); ++v)
        acc = F.add(acc, F.mul(D.coeffs()[v], l.coeffs()[v]));
    return acc;
}

Form random_form(const Field& field, int n, int d, Ring ring, Rng& rng) {
    std::vector<Scalar> c(monomial_count(n, d));
    for (Scalar& x : c) x = rng.scalar(field);
    return Form(field, n, d, ring, std::move(c));
}

LinearForm random_linear(const Field& field, int n, Ring ring, Rng& rng) {
    for (;;) {
        std::vector<Scalar> c(n + 1);
        bool nonzero = false;
        for (Scalar& x : c) {
            x = rng.scalar(field);
            nonzero = nonzero || !Field::is_zero(x);
        }
        if (nonzero) return LinearForm(field, ring, std::move(c));
    }
}

std::vector<LinearForm> random_distinct_linears(const Field& field, int n,
                                                Ring ring, int k, Rng& rng) {
    std::vector<LinearForm> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < k) {
        if (++attempts > 100 * k + 100)
            throw GenericityFailure(
                "random_distinct_linears: could not draw distinct forms");
        LinearForm l = random_linear(field, n, ring, rng);
        bool fresh = true;
        for (const LinearForm& o : out)
            if (proportional(l, o)) fresh = false;
        if (fresh) out.push_back(std::move(l));
    }
    return out;
}

std::vector<Scalar> random_combination(
    const Field& field, const std::vector<std::vector<Scalar>>& basis,
    Rng& rng) {
    if (basis.empty()) throw DomainError("random_combination: empty basis");
    std::vector<Scalar> out(basis[0].size(), Scalar(0));
    for (const auto& v : basis) {
        Scalar c = rng.nonzero_scalar(field);
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = field.add(out[j], field.mul(c, v[j]));
    }
    return out;
}

}  // namespace chowforms::polyring
