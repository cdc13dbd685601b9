#include "chowforms/chowlab.hpp"

#include <cassert>

#include "chowforms/formulas.hpp"

namespace chowforms::chowlab {

using exactalg::ExactMatrix;
using exactalg::RowSpan;
using polyring::monomial_basis;
using polyring::monomial_count;

namespace {

Form coordinate_op(const Field& F, int n, int v) {
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[v] = F.one();
    return Form(F, n, 1, Ring::T, std::move(c));
}

std::vector<Form> rows_to_forms(const RowSpan& span, const Field& F, int n,
                                int degree, Ring ring) {
    std::vector<Form> out;
    for (auto& r : span.reduced_rows())
        out.emplace_back(F, n, degree, ring, std::move(r));
    return out;
}

std::vector<Form> full_monomial_space(const Field& F, int n, int t,
                                      Ring ring) {
    std::vector<Form> out;
    const std::size_t m = monomial_count(n, t);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Scalar> unit(m, Scalar(0));
        unit[j] = F.one();
        out.emplace_back(F, n, t, ring, std::move(unit));
    }
    return out;
}

// Matrix of the contraction S_d -> S_{d-1} by a linear operator.
ExactMatrix contraction_matrix(const LinearForm& L, int d) {
    const int n = L.n();
    const Field& F = L.field();
    Form Lf = L.as_form();
    const std::size_t cols = monomial_count(n, d);
    ExactMatrix M(F, monomial_count(n, d - 1), cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Scalar> unit(cols, Scalar(0));
        unit[j] = F.one();
        Form col = polyring::apply(Lf, Form(F, n, d, Ring::S, std::move(unit)));
        for (std::size_t i = 0; i < col.coeffs().size(); ++i)
            M.at(i, j) = col.coeff(i);
    }
    return M;
}

}  // namespace

std::vector<Form> chow_tangent_basis(std::span<const LinearForm> Ls) {
    if (Ls.empty()) throw DomainError("chow_tangent_basis: no factors");
    if (!polyring::pairwise_non_proportional(Ls))
        throw ProportionalFactors("chow_tangent_basis: proportional factors");
    const int n = Ls[0].n();
    const int s = static_cast<int>(Ls.size());
    const Field& F = Ls[0].field();
    RowSpan span(F, monomial_count(n, s));
    for (int i = 0; i < s; ++i) {
        for (int v = 0; v <= n; ++v) {
            std::vector<Form> factors;
            for (int k = 0; k < s; ++k)
                factors.push_back(k == i ? coordinate_op(F, n, v)
                                         : Ls[k].as_form());
            span.add_row(polyring::product(std::span<const Form>(factors))
                             .coeffs());
        }
    }
    return rows_to_forms(span, F, n, s, Ring::T);
}

std::vector<Form> forms_through_pairwise_meets(std::span<const LinearForm> Ls,
                                               int t) {
    if (Ls.size() < 2)
        throw DomainError("forms_through_pairwise_meets: need s >= 2");
    if (!polyring::pairwise_non_proportional(Ls))
        throw ProportionalFactors("forms_through_pairwise_meets");
    const int n = Ls[0].n();
    const Field& F = Ls[0].field();
    if (n < 2) return full_monomial_space(F, n, t, Ring::T);

    const int s = static_cast<int>(Ls.size());
    auto tb = monomial_basis(n, t);
    const std::size_t conds_per_pair = monomial_count(n - 2, t);
    const std::size_t pairs = static_cast<std::size_t>(s) * (s - 1) / 2;
    ExactMatrix M(F, pairs * conds_per_pair, tb.size());

    std::size_t row0 = 0;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            // parametrize {L_i = L_j = 0} by the joint kernel
            ExactMatrix P(F, 2, n + 1);
            for (int v = 0; v <= n; ++v) {
                P.at(0, v) = Ls[i].coeffs()[v];
                P.at(1, v) = Ls[j].coeffs()[v];
            }
            auto K = exactalg::kernel_basis(P);  // n-1 vectors
            // coordinate v of the moving point, as a linear form in the
            // n-1 parameters
            std::vector<Form> coord(n + 1, Form(F, n - 2, 1, Ring::S));
            for (int v = 0; v <= n; ++v) {
                std::vector<Scalar> c(K.size());
                for (std::size_t k = 0; k < K.size(); ++k) c[k] = K[k][v];
                coord[v] = Form(F, n - 2, 1, Ring::S, std::move(c));
            }
            for (std::size_t mj = 0; mj < tb.size(); ++mj) {
                Form restr(F, n - 2, 0, Ring::S,
                           std::vector<Scalar>{F.one()});
                for (int v = 0; v <= n; ++v)
                    for (int e = 0; e < tb[mj].e[v]; ++e)
                        restr = polyring::multiply(restr, coord[v]);
                for (std::size_t r = 0; r < conds_per_pair; ++r)
                    M.at(row0 + r, mj) = restr.coeff(r);
            }
            row0 += conds_per_pair;
        }
    }
    auto Kf = exactalg::kernel_basis(M);
    std::vector<Form> out;
    out.reserve(Kf.size());
    for (auto& v : Kf) out.emplace_back(F, n, t, Ring::T, std::move(v));
    return out;
}

VerificationReport verify_chow_tangent(const Field& field, int n, int s,
                                       std::uint64_t seed, int retries) {
    VerificationReport rep;
    rep.oracle_name = "chow_tangent";
    rep.params = {{"n", n}, {"s", s}};
    rep.seed = seed;
    rep.field = field;

    const long full = static_cast<long>(monomial_count(n, s));
    if (n < 2) {
        // every binary form of degree s factors into linear forms
        rep.computed = rep.expected = {{"tangent_dim", full},
                                       {"linear_system_dim", full},
                                       {"containment", 1}};
        rep.finalize();
        return rep;
    }

    rep.expected = {{"tangent_dim", static_cast<long>(n) * s + 1},
                    {"linear_system_dim", static_cast<long>(n) * s + 1},
                    {"containment", 1}};
    Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        auto Ls = polyring::random_distinct_linears(field, n, Ring::T, s, rng);
        auto tangent = chow_tangent_basis(Ls);
        auto system = forms_through_pairwise_meets(Ls, s);
        RowSpan sys_span(field, monomial_count(n, s));
        for (const Form& f : system) sys_span.add_row(f.coeffs());
        bool contained = true;
        for (const Form& f : tangent)
            if (!sys_span.contains(f.coeffs())) contained = false;
        rep.computed = {{"tangent_dim", static_cast<long>(tangent.size())},
                        {"linear_system_dim",
                         static_cast<long>(system.size())},
                        {"containment", contained ? 1 : 0}};
        rep.retries_used = attempt;
        rep.finalize();
        if (rep.pass || attempt >= retries) return rep;
        rng = rng.fork();
    }
}

VerificationReport ideal_claim_hilbert_check(const Field& field, int n, int s,
                                             int t_lo, int t_hi,
                                             std::uint64_t seed, int retries) {
    if (s < 2) throw DomainError("ideal_claim_hilbert_check: need s >= 2");
    if (t_lo < s - 1 || t_hi > s + 3 || t_lo > t_hi)
        throw DomainError("ideal_claim_hilbert_check: t range out of bounds");
    VerificationReport rep;
    rep.oracle_name = "ideal_claim";
    rep.params = {{"n", n}, {"s", s}, {"t_lo", t_lo}, {"t_hi", t_hi}};
    rep.seed = seed;
    rep.field = field;

    Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        auto Ls = polyring::random_distinct_linears(field, n, Ring::T, s, rng);
        std::vector<Form> gens;
        for (int i = 0; i < s; ++i) {
            std::vector<Form> factors;
            for (int k = 0; k < s; ++k)
                if (k != i) factors.push_back(Ls[k].as_form());
            gens.push_back(polyring::product(std::span<const Form>(factors)));
        }
        rep.computed.clear();
        rep.expected.clear();
        for (int t = t_lo; t <= t_hi; ++t) {
            RowSpan ideal_span(field, monomial_count(n, t));
            auto mons = full_monomial_space(field, n, t - s + 1, Ring::T);
            for (const Form& g : gens)
                for (const Form& m : mons)
                    ideal_span.add_row(polyring::multiply(g, m).coeffs());
            auto through = forms_through_pairwise_meets(Ls, t);
            std::string key = "t" + std::to_string(t);
            rep.computed["ideal_dim_" + key] =
                static_cast<long>(ideal_span.rank());
            rep.expected["ideal_dim_" + key] =
                static_cast<long>(through.size());
        }
        rep.retries_used = attempt;
        rep.finalize();
        if (rep.pass || attempt >= retries) return rep;
        rng = rng.fork();
    }
}

std::vector<Form> vhat_tangent_basis(const LinearForm& L, const Form& g) {
    if (L.ring() != Ring::T || g.ring() != Ring::S)
        throw DomainError("vhat_tangent_basis: expected L in T, g in S");
    if (g.is_zero()) throw InvalidPoint("vhat_tangent_basis: g = 0");
    if (!polyring::apply(L.as_form(), g).is_zero())
        throw InvalidPoint("vhat_tangent_basis: L does not annihilate g");
    const int n = g.n(), d = g.degree();
    const Field& F = g.field();

    ExactMatrix M = contraction_matrix(L, d);
    RowSpan span(F, monomial_count(n, d));
    for (auto& v : exactalg::kernel_basis(M)) span.add_row(std::move(v));
    for (int v = 0; v <= n; ++v) {
        Form dv = polyring::apply(coordinate_op(F, n, v), g);
        std::vector<Scalar> rhs(dv.coeffs());
        for (Scalar& x : rhs) x = F.neg(x);
        auto sol = exactalg::solve(M, rhs);
        if (!sol)
            throw GenericityFailure(
                "vhat_tangent_basis: contraction unexpectedly not surjective");
        span.add_row(std::move(*sol));
    }
    return rows_to_forms(span, F, n, d, Ring::S);
}

namespace {

// One random point on the cone over the codimension-one variety: a random
// operator L and a random element of its inverse system in degree d.
std::pair<LinearForm, Form> random_vhat_point(const Field& F, int n, int d,
                                              Rng& rng) {
    LinearForm L = polyring::random_linear(F, n, Ring::T, rng);
    auto fiber = exactalg::kernel_basis(contraction_matrix(L, d));
    Form g(F, n, d, Ring::S,
           polyring::random_combination(F, fiber, rng));
    return {std::move(L), std::move(g)};
}

}  // namespace

long terracini_dim(const Field& field, int n, int d, int s,
                   std::uint64_t seed) {
    Rng rng(seed);
    RowSpan span(field, monomial_count(n, d));
    for (int k = 0; k < s; ++k) {
        auto [L, g] = random_vhat_point(field, n, d, rng);
        for (const Form& f : vhat_tangent_basis(L, g)) span.add_row(f.coeffs());
    }
    return static_cast<long>(span.rank()) - 1;
}

long smin_oracle(const Field& field, int n, int d, std::uint64_t seed,
                 int retries) {
    const std::size_t full = monomial_count(n, d);
    Rng outer(seed);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        Rng rng = outer;
        outer = outer.fork();
        RowSpan span(field, full);
        // the tangent span is monotone in s, so grow one point at a time
        for (int s = 1; s <= static_cast<int>(full) + 1; ++s) {
            auto [L, g] = random_vhat_point(field, n, d, rng);
            for (const Form& f : vhat_tangent_basis(L, g))
                span.add_row(f.coeffs());
            if (span.rank() == full) return s;
        }
    }
    throw GenericityFailure("smin_oracle: span never filled the ambient space");
}

VerificationReport verify_terracini(const Field& field, int n, int d,
                                    std::uint64_t seed, int retries) {
    VerificationReport rep;
    rep.oracle_name = "terracini";
    rep.params = {{"n", n}, {"d", d}};
    rep.seed = seed;
    rep.field = field;
    rep.expected = {{"smin", formulas::smin(n, d)}};
    Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        rep.computed = {{"smin", smin_oracle(field, n, d, rng.next_u64(), 0)}};
        rep.retries_used = attempt;
        rep.finalize();
        if (rep.pass || attempt >= retries) return rep;
    }
}

namespace {

bool block_spans_hyperplane(const Field& F,
                            const std::vector<LinearForm>& pts,
                            const std::vector<int>& block) {
    const int n = pts[0].n();
    ExactMatrix M(F, block.size(), n + 1);
    for (std::size_t i = 0; i < block.size(); ++i)
        for (int v = 0; v <= n; ++v) M.at(i, v) = pts[block[i]].coeffs()[v];
    return exactalg::rank(M) == static_cast<std::size_t>(n);
}

void count_partitions(const Field& F, const std::vector<LinearForm>& pts,
                      int n, int s, std::vector<bool>& used, int blocks_done,
                      mpz_class& count, bool& deficient) {
    const int total = n * s;
    if (blocks_done == s) {
        ++count;
        return;
    }
    int first = 0;
    while (first < total && used[first]) ++first;
    used[first] = true;
    // choose the n-1 remaining members of this block from higher indices
    std::vector<int> comb;
    std::vector<int> avail;
    for (int i = first + 1; i < total; ++i)
        if (!used[i]) avail.push_back(i);
    const int need = n - 1;
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    for (;;) {
        std::vector<int> block{first};
        for (int i = 0; i < need; ++i) block.push_back(avail[idx[i]]);
        if (block_spans_hyperplane(F, pts, block)) {
            for (int i = 0; i < need; ++i) used[avail[idx[i]]] = true;
            count_partitions(F, pts, n, s, used, blocks_done + 1, count,
                             deficient);
            for (int i = 0; i < need; ++i) used[avail[idx[i]]] = false;
        } else {
            deficient = true;
        }
        // next combination
        int k = need - 1;
        while (k >= 0 &&
               idx[k] == static_cast<int>(avail.size()) - need + k)
            --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < need; ++i) idx[i] = idx[i - 1] + 1;
    }
    used[first] = false;
}

}  // namespace

mpz_class chow_degree_oracle(const Field& field, int n, int s,
                             std::uint64_t seed, long enum_guard,
                             int retries) {
    // partition count (ns)! / ((n!)^s s!)
    mpz_class npart;
    mpz_fac_ui(npart.get_mpz_t(), static_cast<unsigned long>(n) * s);
    mpz_class nf, sf;
    mpz_fac_ui(nf.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(sf.get_mpz_t(), static_cast<unsigned long>(s));
    mpz_class denom = sf;
    for (int i = 0; i < s; ++i) denom *= nf;
    npart /= denom;
    if (npart > enum_guard)
        throw EnumerationTooLarge("chow_degree_oracle: " + npart.get_str() +
                                  " partitions exceed the guard");

    Rng rng(seed);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        std::vector<LinearForm> pts;
        for (int i = 0; i < n * s; ++i)
            pts.push_back(polyring::random_linear(field, n, Ring::S, rng));
        mpz_class count = 0;
        bool deficient = false;
        std::vector<bool> used(n * s, false);
        count_partitions(field, pts, n, s, used, 0, count, deficient);
        if (!deficient) return count;
        rng = rng.fork();
    }
    throw GenericityFailure(
        "chow_degree_oracle: rank-deficient blocks after retries");
}

VerificationReport verify_chow_degree(const Field& field, int n, int s,
                                      std::uint64_t seed, long enum_guard,
                                      int retries) {
    VerificationReport rep;
    rep.oracle_name = "chow_degree";
    rep.params = {{"n", n}, {"s", s}};
    rep.seed = seed;
    rep.field = field;
    rep.expected = {{"degree", formulas::chow_degree(n, s)}};
    rep.computed = {
        {"degree", chow_degree_oracle(field, n, s, seed, enum_guard, retries)}};
    rep.finalize();
    return rep;
}

}  // namespace chowforms::chowlab
