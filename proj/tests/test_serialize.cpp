#include "doctest.h"

#include "chowforms/serialize.hpp"

using namespace chowforms;
using namespace chowforms::serialize;
using exactalg::Field;
using exactalg::kDefaultPrime;
using exactalg::Rng;
using polyring::Form;
using polyring::Ring;

TEST_SUITE_BEGIN("serialize");

TEST_CASE("form round trip over both fields (property)") {
    for (const Field& F :
         {Field::prime(kDefaultPrime), Field::rationals()}) {
        Rng rng(77);
        for (int trial = 0; trial < 5; ++trial) {
            int n = 1 + static_cast<int>(rng.below(3));
            int d = 1 + static_cast<int>(rng.below(4));
            Ring ring = rng.below(2) ? Ring::S : Ring::T;
            Form f = polyring::random_form(F, n, d, ring, rng);
            CHECK(form_from_json(form_to_json(f)) == f);
        }
    }
}

TEST_CASE("rational coefficients serialize as fraction strings") {
    Field QQ = Field::rationals();
    Form f(QQ, 1, 1, Ring::S,
           {QQ.div(QQ.one(), QQ.from_int(3)), QQ.from_int(-2)});
    json j = form_to_json(f);
    CHECK(j["coeffs"][0] == "1/3");
    CHECK(j["coeffs"][1] == "-2");
    CHECK(form_from_json(j) == f);
}

TEST_CASE("instance round trip keeps summands and hyperplanes") {
    Field F = Field::prime(kDefaultPrime);
    auto inst = decomp::synth_instance(F, 2, 4, 3, 9);
    auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.f == inst.f);
    CHECK(back.hyperplanes == inst.hyperplanes);
    CHECK(back.summands == inst.summands);
    CHECK(back.check_invariants());
}

TEST_CASE("reports carry big integers as decimal strings") {
    chowlab::VerificationReport rep;
    rep.oracle_name = "demo";
    rep.field = Field::prime(kDefaultPrime);
    rep.computed["degree"] = mpz_class("221643095476699771875");
    rep.expected["degree"] = mpz_class("221643095476699771875");
    rep.finalize();
    json j = report_to_json(rep);
    CHECK(j["computed"]["degree"] == "221643095476699771875");
    CHECK(j["pass"] == true);
}

TEST_CASE("csv row shape matches the published table columns") {
    auto p = formulas::profile(2, 5);
    CHECK(profile_csv_row(p) == "5,2,3,15");
}

TEST_SUITE_END();
