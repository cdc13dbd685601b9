#include "doctest.h"

#include "chowforms/chowlab.hpp"
#include "chowforms/formulas.hpp"

using namespace chowforms;
using namespace chowforms::chowlab;
using namespace chowforms::polyring;
using exactalg::Field;
using exactalg::kDefaultPrime;
using exactalg::Rng;

namespace {
const Field kFp = Field::prime(kDefaultPrime);
}

TEST_SUITE_BEGIN("chowlab");

TEST_CASE("chow tangent dimension is ns + 1 at generic points") {
    Rng rng(1);
    auto L23 = random_distinct_linears(kFp, 2, Ring::T, 3, rng);
    CHECK(chow_tangent_basis(L23).size() == 7);

    auto L32 = random_distinct_linears(kFp, 3, Ring::T, 2, rng);
    CHECK(chow_tangent_basis(L32).size() == 7);
}

TEST_CASE("n=1: tangent space is all of T_2 (every binary quadric splits)") {
    std::vector<LinearForm> Ls{
        LinearForm(kFp, Ring::T, {kFp.one(), kFp.zero()}),
        LinearForm(kFp, Ring::T, {kFp.zero(), kFp.one()})};
    CHECK(chow_tangent_basis(Ls).size() == 3);
}

TEST_CASE("chow_tangent_basis rejects proportional factors") {
    Rng rng(2);
    LinearForm l = random_linear(kFp, 2, Ring::T, rng);
    std::vector<LinearForm> Ls{l, l};
    CHECK_THROWS_AS(chow_tangent_basis(Ls), ProportionalFactors);
}

TEST_CASE("forms through pairwise meets: cubics and lines in the dual plane") {
    Rng rng(3);
    auto Ls = random_distinct_linears(kFp, 2, Ring::T, 3, rng);
    CHECK(forms_through_pairwise_meets(Ls, 3).size() == 7);
    CHECK(forms_through_pairwise_meets(Ls, 1).empty());
    // each returned form really vanishes at the three intersection points
    for (const Form& f : forms_through_pairwise_meets(Ls, 3)) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                exactalg::ExactMatrix P(kFp, 2, 3);
                for (int v = 0; v <= 2; ++v) {
                    P.at(0, v) = Ls[i].coeffs()[v];
                    P.at(1, v) = Ls[j].coeffs()[v];
                }
                for (const auto& pt : exactalg::kernel_basis(P))
                    CHECK(exactalg::Field::is_zero(evaluate(f, pt)));
            }
    }
}

TEST_CASE("verify_chow_tangent on the small grid") {
    for (auto [n, s] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        auto rep = verify_chow_tangent(kFp, n, s, 7);
        CHECK(rep.pass);
        CHECK(rep.computed.at("tangent_dim") == n * s + 1);
    }
    CHECK(verify_chow_tangent(kFp, 1, 4, 0).pass);
}

TEST_CASE("ideal claim: degree-t pieces agree") {
    auto rep = ideal_claim_hilbert_check(kFp, 2, 3, 2, 3, 11);
    CHECK(rep.pass);
    CHECK(rep.computed.at("ideal_dim_t2") == 3);
    CHECK(rep.computed.at("ideal_dim_t3") == 7);

    auto rep3 = ideal_claim_hilbert_check(kFp, 3, 3, 2, 4, 5);
    CHECK(rep3.pass);
}

TEST_CASE("vhat tangent basis dimensions") {
    Rng rng(4);
    // generic point with n=2, d=3: affine dimension 6
    LinearForm L = random_linear(kFp, 2, Ring::T, rng);
    exactalg::ExactMatrix M(kFp, 1, 3);
    Form Lf = L.as_form();
    // random fiber element
    std::vector<std::vector<exactalg::Scalar>> fiber;
    {
        auto basis = monomial_basis(2, 3);
        exactalg::ExactMatrix C(kFp, monomial_count(2, 2), monomial_count(2, 3));
        for (std::size_t j = 0; j < monomial_count(2, 3); ++j) {
            std::vector<exactalg::Scalar> unit(monomial_count(2, 3),
                                               exactalg::Scalar(0));
            unit[j] = kFp.one();
            Form col = apply(Lf, Form(kFp, 2, 3, Ring::S, std::move(unit)));
            for (std::size_t i = 0; i < col.coeffs().size(); ++i)
                C.at(i, j) = col.coeff(i);
        }
        fiber = exactalg::kernel_basis(C);
    }
    Form g(kFp, 2, 3, Ring::S, random_combination(kFp, fiber, rng));
    auto tangent = vhat_tangent_basis(L, g);
    CHECK(tangent.size() == 6);  // projective 5 = vhat_dim(2, 3)

    // rational normal curve: g = X1^d with L = d0
    const int d = 5;
    std::vector<exactalg::Scalar> c(monomial_count(1, d),
                                    exactalg::Scalar(0));
    c[d] = kFp.one();  // X1^d is last in graded-lex order
    Form gg(kFp, 1, d, Ring::S, std::move(c));
    LinearForm L0(kFp, Ring::T, {kFp.one(), kFp.zero()});
    CHECK(vhat_tangent_basis(L0, gg).size() == 2);

    // a point not on the fiber is rejected
    Form notg = random_form(kFp, 2, 3, Ring::S, rng);
    CHECK_THROWS_AS(vhat_tangent_basis(L, notg), InvalidPoint);
}

TEST_CASE("terracini dimension is monotone and stabilizes at full") {
    const int n = 2, d = 4;
    const long full = static_cast<long>(monomial_count(n, d)) - 1;
    long prev = -1;
    for (int s = 1; s <= 4; ++s) {
        long dim = terracini_dim(kFp, n, d, s, 13);
        CHECK(dim >= prev);
        prev = dim;
    }
    CHECK(prev == full);
}

TEST_CASE("smin oracle matches the closed formula on small cases") {
    CHECK(smin_oracle(kFp, 2, 5, 7) == formulas::smin(2, 5));
    CHECK(smin_oracle(kFp, 2, 4, 7) == formulas::smin(2, 4));
    CHECK(smin_oracle(kFp, 3, 3, 7) == 2);
    CHECK(verify_terracini(kFp, 2, 5, 7).pass);
}

TEST_CASE("chow degree by enumeration") {
    CHECK(chow_degree_oracle(kFp, 2, 3, 17) == 15);
    CHECK(chow_degree_oracle(kFp, 3, 2, 17) == 10);
    CHECK(chow_degree_oracle(kFp, 2, 4, 17) == 105);
    CHECK(verify_chow_degree(kFp, 2, 3, 23).pass);
    CHECK_THROWS_AS(chow_degree_oracle(kFp, 3, 12, 1), EnumerationTooLarge);
}

TEST_SUITE_END();
