#include "chowforms/apolar.hpp"

#include "chowforms/errors.hpp"

namespace chowforms::apolar {

using polyring::monomial_basis;
using polyring::monomial_count;
using polyring::MultiIndex;

ExactMatrix catalecticant(const Form& f, int s) {
    const int n = f.n(), d = f.degree();
    if (s < 0 || s > d) throw DegreeMismatch("catalecticant: need 0 <= s <= d");
    const Field& F = f.field();
    auto tb = monomial_basis(n, s);
    ExactMatrix M(F, monomial_count(n, d - s), tb.size());
    for (std::size_t j = 0; j < tb.size(); ++j) {
        std::vector<Scalar> unit(tb.size(), Scalar(0));
        unit[j] = F.one();
        Form Dj(F, n, s, Ring::T, std::move(unit));
        Form col = polyring::apply(Dj, f);
        for (std::size_t i = 0; i < col.coeffs().size(); ++i)
            M.at(i, j) = col.coeff(i);
    }
    return M;
}

PerpPiece perp_space(const Form& f, int s) {
    const int n = f.n();
    auto K = exactalg::kernel_basis(catalecticant(f, s));
    PerpPiece out{n, f.degree(), s, {}};
    out.basis.reserve(K.size());
    for (auto& v : K)
        out.basis.emplace_back(f.field(), n, s, Ring::T, std::move(v));
    return out;
}

std::vector<Form> inverse_system(const Form& D, int e) {
    const int n = D.n(), s = D.degree();
    const Field& F = D.field();
    std::vector<Form> out;
    if (e < s) {
        // no operator of degree s can act nontrivially on S_e
        const std::size_t m = monomial_count(n, e);
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Scalar> unit(m, Scalar(0));
            unit[j] = F.one();
            out.emplace_back(F, n, e, Ring::S, std::move(unit));
        }
        return out;
    }
    // matrix of S_e -> S_{e-s}, g |-> D o g
    const std::size_t cols = monomial_count(n, e);
    ExactMatrix M(F, monomial_count(n, e - s), cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Scalar> unit(cols, Scalar(0));
        unit[j] = F.one();
        Form gj(F, n, e, Ring::S, std::move(unit));
        Form col = polyring::apply(D, gj);
        for (std::size_t i = 0; i < col.coeffs().size(); ++i)
            M.at(i, j) = col.coeff(i);
    }
    auto K = exactalg::kernel_basis(M);
    out.reserve(K.size());
    for (auto& v : K) out.emplace_back(F, n, e, Ring::S, std::move(v));
    return out;
}

std::vector<Form> point_ideal_piece(std::span<const LinearForm> points,
                                    int s) {
    if (points.empty()) throw DomainError("point_ideal_piece: no points");
    if (!polyring::pairwise_non_proportional(points))
        throw ProportionalPoints("point_ideal_piece: coincident points");
    const int n = points[0].n();
    const Field& F = points[0].field();
    auto tb = monomial_basis(n, s);
    ExactMatrix M(F, points.size(), tb.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i].coeffs();
        for (std::size_t j = 0; j < tb.size(); ++j) {
            Scalar v = F.one();
            for (int var = 0; var <= n; ++var)
                for (int e = 0; e < tb[j].e[var]; ++e)
                    v = F.mul(v, pt[var]);
            M.at(i, j) = v;
        }
    }
    auto K = exactalg::kernel_basis(M);
    std::vector<Form> out;
    out.reserve(K.size());
    for (auto& v : K) out.emplace_back(F, n, s, Ring::T, std::move(v));
    return out;
}

std::optional<std::vector<Scalar>> waring_fit(
    const Form& f, std::span<const LinearForm> points) {
    if (points.empty()) throw DomainError("waring_fit: no points");
    if (!polyring::pairwise_non_proportional(points))
        throw ProportionalPoints("waring_fit: coincident points");
    const int n = f.n(), d = f.degree();
    const Field& F = f.field();
    ExactMatrix M(F, monomial_count(n, d), points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Form pw = polyring::power(points[j], d);
        for (std::size_t i = 0; i < pw.coeffs().size(); ++i)
            M.at(i, j) = pw.coeff(i);
    }
    return exactalg::solve(M, f.coeffs());
}

}  // namespace chowforms::apolar
