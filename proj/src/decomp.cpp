#include "chowforms/decomp.hpp"

#include <cassert>

#include "chowforms/formulas.hpp"

namespace chowforms::decomp {

using exactalg::ExactMatrix;
using exactalg::RowSpan;
using polyring::monomial_count;

bool CodimOneInstance::check_invariants() const {
    if (static_cast<int>(hyperplanes.size()) != s) return false;
    if (!polyring::pairwise_non_proportional(hyperplanes)) return false;
    if (summands.empty()) return true;
    if (static_cast<int>(summands.size()) != s) return false;
    Form total(f.field(), n, d, Ring::S);
    for (int i = 0; i < s; ++i) {
        if (!polyring::apply(hyperplanes[i].as_form(), summands[i]).is_zero())
            return false;
        total = polyring::add(total, summands[i]);
    }
    return total == f;
}

SamplingPlan SamplingPlan::standard(int n, int d, std::uint64_t seed) {
    SamplingPlan p;
    p.points_per_hyperplane =
        static_cast<long>(formulas::binom(d + n - 1, n - 1).get_si());
    p.seed = seed;
    return p;
}

CodimOneInstance synth_instance(const Field& field, int n, int d, int s,
                                std::uint64_t seed) {
    Rng rng(seed);
    auto Ls = polyring::random_distinct_linears(field, n, Ring::T, s, rng);
    std::vector<Form> summands;
    Form f(field, n, d, Ring::S);
    for (int i = 0; i < s; ++i) {
        auto fiber = apolar::inverse_system(Ls[i].as_form(), d);
        std::vector<std::vector<Scalar>> vecs;
        for (const Form& b : fiber) vecs.push_back(b.coeffs());
        Form g(field, n, d, Ring::S,
               polyring::random_combination(field, vecs, rng));
        f = polyring::add(f, g);
        summands.push_back(std::move(g));
    }
    CodimOneInstance inst{n, d, s, std::move(f), std::move(Ls),
                          std::move(summands)};
    assert(inst.check_invariants());
    return inst;
}

bool forward_check(const Form& f, std::span<const LinearForm> Ls) {
    if (Ls.empty()) throw DomainError("forward_check: no hyperplanes");
    if (!polyring::pairwise_non_proportional(Ls))
        throw ProportionalFactors("forward_check: proportional hyperplanes");
    if (static_cast<int>(Ls.size()) > f.degree()) return true;
    return polyring::apply(polyring::product(Ls), f).is_zero();
}

namespace {

// Random projective point on the hyperplane {L = 0} in the dual space.
LinearForm random_point_on_hyperplane(const LinearForm& L, Rng& rng) {
    const Field& F = L.field();
    ExactMatrix M(F, 1, L.n() + 1);
    for (int v = 0; v <= L.n(); ++v) M.at(0, v) = L.coeffs()[v];
    auto K = exactalg::kernel_basis(M);
    for (;;) {
        std::vector<Scalar> c(L.n() + 1, Scalar(0));
        bool nonzero = false;
        for (const auto& k : K) {
            Scalar x = rng.scalar(F);
            if (!Field::is_zero(x)) nonzero = true;
            for (int v = 0; v <= L.n(); ++v)
                c[v] = F.add(c[v], F.mul(x, k[v]));
        }
        if (nonzero) return LinearForm(F, Ring::S, std::move(c));
    }
}

}  // namespace

std::optional<CodimOneInstance> reconstruct(const Form& f,
                                            std::span<const LinearForm> Ls,
                                            const SamplingPlan& plan) {
    const int n = f.n(), d = f.degree();
    const int s = static_cast<int>(Ls.size());
    const long N = plan.points_per_hyperplane;
    const Field& F = f.field();
    Rng rng(plan.seed);

    for (int attempt = 0; attempt <= plan.retries; ++attempt) {
        std::vector<std::vector<LinearForm>> pts(s);
        for (int i = 0; i < s; ++i) {
            while (static_cast<long>(pts[i].size()) < N) {
                LinearForm p = random_point_on_hyperplane(Ls[i], rng);
                bool fresh = true;
                for (const LinearForm& q : pts[i])
                    if (polyring::proportional(p, q)) fresh = false;
                if (fresh) pts[i].push_back(std::move(p));
            }
        }
        // f = sum_{ij} c_ij l_ij^d, one power column per sampled point
        const std::size_t rows = monomial_count(n, d);
        ExactMatrix M(F, rows, static_cast<std::size_t>(s) * N);
        std::vector<std::vector<Form>> powers(s);
        for (int i = 0; i < s; ++i) {
            for (long j = 0; j < N; ++j) {
                Form pw = polyring::power(pts[i][j], d);
                const std::size_t col = static_cast<std::size_t>(i) * N + j;
                for (std::size_t r = 0; r < rows; ++r)
                    M.at(r, col) = pw.coeff(r);
                powers[i].push_back(std::move(pw));
            }
        }
        auto sol = exactalg::solve(M, f.coeffs());
        if (!sol) continue;  // resample

        std::vector<Form> summands;
        for (int i = 0; i < s; ++i) {
            Form acc(F, n, d, Ring::S);
            for (long j = 0; j < N; ++j) {
                const Scalar& c = (*sol)[static_cast<std::size_t>(i) * N + j];
                if (Field::is_zero(c)) continue;
                acc = polyring::add(acc, polyring::scale(c, powers[i][j]));
            }
            summands.push_back(std::move(acc));
        }
        CodimOneInstance inst{n,
                              d,
                              s,
                              f,
                              std::vector<LinearForm>(Ls.begin(), Ls.end()),
                              std::move(summands)};
        if (inst.check_invariants()) return inst;
    }
    return std::nullopt;
}

std::optional<std::vector<PowerTerm>> sylvester_binary(const Form& f) {
    if (f.n() != 1) throw DomainError("sylvester_binary: need a binary form");
    const Field& F = f.field();
    if (!F.is_prime_field())
        throw DomainError("sylvester_binary: need a prime field");
    if (F.modulus() > 1'000'000)
        throw EnumerationTooLarge(
            "sylvester_binary: root scan needs a small modulus");
    const int d = f.degree();
    const int s = static_cast<int>(formulas::sstar(d));
    auto perp = apolar::perp_space(f, s);
    if (perp.dim() == 0) return std::nullopt;

    const long p = F.modulus().get_si();
    // candidate apolar operators: basis elements, then pairwise sums
    std::vector<Form> candidates = perp.basis;
    for (std::size_t a = 0; a < perp.basis.size(); ++a)
        for (std::size_t b = a + 1; b < perp.basis.size(); ++b)
            candidates.push_back(polyring::add(perp.basis[a], perp.basis[b]));

    for (const Form& D : candidates) {
        std::vector<LinearForm> roots;
        for (long t = 0; t <= p; ++t) {
            std::vector<Scalar> pt =
                t < p ? std::vector<Scalar>{F.one(), F.from_int(t)}
                      : std::vector<Scalar>{F.zero(), F.one()};
            if (Field::is_zero(polyring::evaluate(D, pt)))
                roots.emplace_back(F, Ring::S, pt);
        }
        if (static_cast<int>(roots.size()) != s) continue;  // does not split
        auto coeffs = apolar::waring_fit(f, roots);
        if (!coeffs) continue;
        std::vector<PowerTerm> out;
        for (int i = 0; i < s; ++i)
            out.push_back(PowerTerm{(*coeffs)[i], roots[i]});
        return out;
    }
    return std::nullopt;
}

namespace {

// All points of the projective space over F_p, in a canonical order:
// leading coordinate 1, remaining coordinates free.
std::vector<LinearForm> rational_projective_points(const Field& F, int n,
                                                   Ring ring) {
    const long p = F.modulus().get_si();
    std::vector<LinearForm> out;
    for (int lead = 0; lead <= n; ++lead) {
        const int free = n - lead;
        std::vector<long> digits(free, 0);
        for (;;) {
            std::vector<Scalar> c(n + 1, Scalar(0));
            c[lead] = F.one();
            for (int i = 0; i < free; ++i)
                c[lead + 1 + i] = F.from_int(digits[i]);
            out.emplace_back(F, ring, std::move(c));
            int k = free - 1;
            while (k >= 0 && digits[k] == p - 1) digits[k--] = 0;
            if (k < 0) break;
            ++digits[k];
        }
    }
    return out;
}

void count_members(const std::vector<LinearForm>& pts, const RowSpan& span,
                   const Form& partial, int start, int remaining,
                   long& count) {
    if (remaining == 0) {
        if (span.contains(partial.coeffs())) ++count;
        return;
    }
    const int last = static_cast<int>(pts.size()) - remaining;
    for (int i = start; i <= last; ++i) {
        count_members(pts, span,
                      polyring::multiply(partial, pts[i].as_form()), i + 1,
                      remaining - 1, count);
    }
}

}  // namespace

long vsh_point_count(const Form& f, int s, long enum_guard) {
    const Field& F = f.field();
    if (!F.is_prime_field())
        throw DomainError("vsh_point_count: need a small prime field");
    const int n = f.n();
    auto pts = rational_projective_points(F, n, Ring::T);
    mpz_class subsets = formulas::binom(static_cast<long>(pts.size()), s);
    if (subsets > enum_guard)
        throw EnumerationTooLarge("vsh_point_count: " + subsets.get_str() +
                                  " subsets exceed the guard");
    auto perp = apolar::perp_space(f, s);
    if (perp.dim() == 0) return 0;
    RowSpan span(F, monomial_count(n, s));
    for (const Form& b : perp.basis) span.add_row(b.coeffs());

    long count = 0;
    Form unit(F, n, 0, Ring::T, std::vector<Scalar>{F.one()});
    count_members(pts, span, unit, 0, s, count);
    return count;
}

VerificationReport verify_smoothness_case(const Field& field, int n, int d,
                                          std::uint64_t seed, int retries) {
    const long s = formulas::smin(n, d);
    const mpz_class cond = formulas::binom(d - s + n, n);
    if (mpz_class(n) * s != cond)
        throw NotZeroDimensional(
            "verify_smoothness_case: ns != C(d-s+n, n) for (n, d) = (" +
            std::to_string(n) + ", " + std::to_string(d) + ")");
    VerificationReport rep;
    rep.oracle_name = "smoothness";
    rep.params = {{"n", n}, {"d", d}, {"s", s}};
    rep.seed = seed;
    rep.field = field;
    const mpz_class expected_dim_z =
        formulas::binom(s + n, n) - mpz_class(n) * s;
    const long expected_dim = expected_dim_z.get_si();
    rep.expected = {{"perp_dim", expected_dim}, {"ideal_dim", expected_dim}};

    Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        auto pts = polyring::random_distinct_linears(field, n, Ring::S,
                                                     static_cast<int>(n * s),
                                                     rng);
        Form g(field, n, d, Ring::S);
        for (const LinearForm& l : pts)
            g = polyring::add(g, polyring::power(l, d));
        auto perp = apolar::perp_space(g, static_cast<int>(s));
        auto ideal = apolar::point_ideal_piece(pts, static_cast<int>(s));
        rep.computed = {{"perp_dim", static_cast<long>(perp.dim())},
                        {"ideal_dim", static_cast<long>(ideal.size())}};
        rep.retries_used = attempt;
        rep.finalize();
        if (rep.pass || attempt >= retries) return rep;
        rng = rng.fork();
    }
}

VerificationReport verify_roundtrip(const Field& field, int n, int d,
                                    std::uint64_t seed, int retries) {
    const int s = static_cast<int>(formulas::smin(n, d));
    VerificationReport rep;
    rep.oracle_name = "roundtrip";
    rep.params = {{"n", n}, {"d", d}, {"s", s}};
    rep.seed = seed;
    rep.field = field;
    rep.expected = {{"forward_check", 1}, {"reconstructed", 1}};

    Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        auto inst = synth_instance(field, n, d, s, rng.next_u64());
        bool fwd = forward_check(inst.f, inst.hyperplanes);
        SamplingPlan plan = SamplingPlan::standard(n, d, rng.next_u64());
        std::optional<CodimOneInstance> rec;
        if (fwd) rec = reconstruct(inst.f, inst.hyperplanes, plan);
        rep.computed = {{"forward_check", fwd ? 1 : 0},
                        {"reconstructed", rec.has_value() ? 1 : 0}};
        rep.retries_used = attempt;
        rep.finalize();
        if (rep.pass || attempt >= retries) return rep;
    }
}

}  // namespace chowforms::decomp
