#include "doctest.h"

#include "chowforms/decomp.hpp"
#include "chowforms/formulas.hpp"

using namespace chowforms;
using namespace chowforms::decomp;
using namespace chowforms::polyring;
using exactalg::Field;
using exactalg::kDefaultPrime;
using exactalg::Rng;
using exactalg::Scalar;

namespace {
const Field kFp = Field::prime(kDefaultPrime);
const Field kF11 = Field::prime(mpz_class(11));
const Field kF101 = Field::prime(mpz_class(101));
}

TEST_SUITE_BEGIN("decomp");

TEST_CASE("synthetic instances satisfy the invariants by construction") {
    for (auto [n, d, s] : {std::tuple{2, 5, 3}, {1, 3, 2}, {3, 4, 3}}) {
        auto inst = synth_instance(kFp, n, d, s, 42);
        CHECK(inst.check_invariants());
        CHECK(forward_check(inst.f, inst.hyperplanes));
    }
}

TEST_CASE("forward_check: planted, pure power, and generic-negative") {
    auto inst = synth_instance(kFp, 2, 5, 3, 1);
    CHECK(forward_check(inst.f, inst.hyperplanes));

    // X0^d is annihilated by d1
    std::vector<Scalar> c(monomial_count(2, 4), Scalar(0));
    c[0] = kFp.one();
    Form f(kFp, 2, 4, Ring::S, std::move(c));
    std::vector<LinearForm> L1{
        LinearForm(kFp, Ring::T, {kFp.zero(), kFp.one(), kFp.zero()})};
    CHECK(forward_check(f, L1));

    // below smin a random product cannot be apolar to a random form
    Rng rng(9);
    Form g = random_form(kFp, 2, 5, Ring::S, rng);
    auto Ls = random_distinct_linears(kFp, 2, Ring::T, 2, rng);
    CHECK(!forward_check(g, Ls));
}

TEST_CASE("reconstruct: round trip on synthetic instances") {
    for (auto [n, d, s] : {std::tuple{2, 5, 3}, {2, 4, 3}}) {
        auto inst = synth_instance(kFp, n, d, s, 5);
        auto plan = SamplingPlan::standard(n, d, 77);
        CHECK(plan.points_per_hyperplane ==
              formulas::binom(d + n - 1, n - 1));
        auto rec = reconstruct(inst.f, inst.hyperplanes, plan);
        REQUIRE(rec.has_value());
        CHECK(rec->check_invariants());
        CHECK(static_cast<int>(rec->summands.size()) == s);
        Form total(kFp, n, d, Ring::S);
        for (const Form& g : rec->summands) total = add(total, g);
        CHECK(total == inst.f);
        for (int i = 0; i < s; ++i)
            CHECK(apply(inst.hyperplanes[i].as_form(), rec->summands[i])
                      .is_zero());
    }
}

TEST_CASE("reconstruct fails cleanly when forward_check is false") {
    Rng rng(8);
    Form g = random_form(kFp, 2, 5, Ring::S, rng);
    auto Ls = random_distinct_linears(kFp, 2, Ring::T, 2, rng);
    REQUIRE(!forward_check(g, Ls));
    auto plan = SamplingPlan::standard(2, 5, 3);
    plan.retries = 1;
    CHECK(!reconstruct(g, Ls, plan).has_value());
}

TEST_CASE("sylvester: X0^3 + X1^3 splits into two cubes") {
    std::vector<Scalar> c(4, Scalar(0));
    c[0] = kF101.one();
    c[3] = kF101.one();
    Form f(kF101, 1, 3, Ring::S, std::move(c));
    auto dec = sylvester_binary(f);
    REQUIRE(dec.has_value());
    REQUIRE(dec->size() == 2);
    for (const auto& term : *dec) CHECK(term.coefficient == kF101.one());
    // recovered points are [1:0] and [0:1]
    CHECK((*dec)[0].point.coeffs() !=(*dec)[1].point.coeffs());
    Form total(kF101, 1, 3, Ring::S);
    for (const auto& term : *dec)
        total = add(total, scale(term.coefficient, power(term.point, 3)));
    CHECK(total == f);
}

TEST_CASE("sylvester: planted odd-degree instances are recovered exactly") {
    Rng rng(15);
    const int d = 7, s = 4;  // odd degree: 1-dimensional kernel forces the roots
    auto pts = random_distinct_linears(kF101, 1, Ring::S, s, rng);
    Form f(kF101, 1, d, Ring::S);
    for (const LinearForm& l : pts)
        f = add(f, scale(rng.nonzero_scalar(kF101), power(l, d)));
    auto dec = sylvester_binary(f);
    REQUIRE(dec.has_value());
    REQUIRE(dec->size() == s);
    // same point set (order-insensitive)
    for (const auto& term : *dec) {
        bool found = false;
        for (const LinearForm& l : pts)
            if (proportional(term.point, l)) found = true;
        CHECK(found);
    }
    Form total(kF101, 1, d, Ring::S);
    for (const auto& term : *dec)
        total = add(total, scale(term.coefficient, power(term.point, d)));
    CHECK(total == f);
}

TEST_CASE("sylvester reports SplittingFailure on non-split kernels") {
    // scan seeds for a quartic over F_11 whose apolar cubics do not split
    bool found_failure = false;
    for (std::uint64_t seed = 0; seed < 40 && !found_failure; ++seed) {
        Rng rng(seed);
        Form f = random_form(kF11, 1, 4, Ring::S, rng);
        if (f.is_zero()) continue;
        if (!sylvester_binary(f).has_value()) found_failure = true;
    }
    CHECK(found_failure);
}

TEST_CASE("vsh point count: planted point found, degree bound respected") {
    auto inst = synth_instance(kF11, 2, 5, 3, 2);
    long count = vsh_point_count(inst.f, 3);
    CHECK(count >= 1);
    CHECK(count <= 15);
    CHECK(vsh_point_count(inst.f, 2) == 0);

    Rng rng(3);
    Form g = random_form(kF11, 2, 5, Ring::S, rng);
    CHECK(vsh_point_count(g, 2) == 0);  // below smin
    CHECK_THROWS_AS(vsh_point_count(g, 3, 100), EnumerationTooLarge);
}

TEST_CASE("smoothness case (2,5): both dimensions are 4") {
    auto rep = verify_smoothness_case(kFp, 2, 5, 21);
    CHECK(rep.pass);
    CHECK(rep.computed.at("perp_dim") == 4);
    CHECK(rep.computed.at("ideal_dim") == 4);
}

TEST_CASE("smoothness case rejects non-zero-dimensional pairs") {
    CHECK_THROWS_AS(verify_smoothness_case(kFp, 3, 4, 1), NotZeroDimensional);
}

TEST_CASE("roundtrip verification report") {
    auto rep = verify_roundtrip(kFp, 2, 4, 31);
    CHECK(rep.pass);
    CHECK(rep.oracle_name == "roundtrip");
}

TEST_SUITE_END();
