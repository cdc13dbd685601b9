#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chowforms/serialize.hpp"

namespace py = pybind11;
using namespace chowforms;
using exactalg::Field;
using exactalg::Rng;
using polyring::Ring;

namespace {

Field field_from_args(const std::string& prime, bool rationals) {
    if (rationals) return Field::rationals();
    return Field::prime(mpz_class(prime));
}

py::dict profile_dict(const formulas::WaringProfile& p) {
    py::dict d;
    d["n"] = p.n;
    d["d"] = p.d;
    d["smin"] = p.smin;
    d["sexp"] = p.sexp;
    d["sstar"] = p.sstar;
    d["ah_rank"] = p.ah_rank.get_str();
    d["defective"] = p.defective;
    d["vsh_dim"] = p.vsh_dim;
    d["vsh_degree"] = p.vsh_degree.get_str();
    d["chow_dim"] = p.chow_dim;
    d["vhat_dim"] = p.vhat_dim;
    return d;
}

py::dict report_dict(const chowlab::VerificationReport& r) {
    py::dict computed, expected, params;
    for (const auto& [k, v] : r.computed) computed[py::str(k)] = v.get_str();
    for (const auto& [k, v] : r.expected) expected[py::str(k)] = v.get_str();
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    py::dict d;
    d["oracle"] = r.oracle_name;
    d["params"] = params;
    d["seed"] = r.seed;
    d["field"] = r.field.describe();
    d["computed"] = computed;
    d["expected"] = expected;
    d["pass"] = r.pass;
    d["retries_used"] = r.retries_used;
    return d;
}

}  // namespace

PYBIND11_MODULE(_chowforms, m) {
    m.doc() = "codimension-one decompositions of homogeneous forms";

    m.def("smin", &formulas::smin, py::arg("n"), py::arg("d"));
    m.def("sexp", &formulas::sexp, py::arg("n"), py::arg("d"));
    m.def("sstar", &formulas::sstar, py::arg("d"));
    m.def(
        "ah_rank",
        [](long n, long d) { return formulas::ah_rank(n, d).get_str(); },
        py::arg("n"), py::arg("d"));
    m.def("is_defective", &formulas::is_defective, py::arg("n"), py::arg("d"));
    m.def("chow_dim", &formulas::chow_dim, py::arg("n"), py::arg("s"));
    m.def(
        "chow_degree",
        [](long n, long s) { return formulas::chow_degree(n, s).get_str(); },
        py::arg("n"), py::arg("s"));
    m.def("vsh_dim", &formulas::vsh_dim, py::arg("n"), py::arg("d"));
    m.def(
        "vsh_degree",
        [](long n, long d) { return formulas::vsh_degree(n, d).get_str(); },
        py::arg("n"), py::arg("d"));
    m.def("vhat_dim", &formulas::vhat_dim, py::arg("n"), py::arg("d"));
    m.def(
        "profile",
        [](long n, long d) { return profile_dict(formulas::profile(n, d)); },
        py::arg("n"), py::arg("d"));
    m.def(
        "table",
        [](long n_lo, long n_hi, long d_lo, long d_hi) {
            py::list out;
            for (const auto& p : formulas::table(n_lo, n_hi, d_lo, d_hi))
                out.append(profile_dict(p));
            return out;
        },
        py::arg("n_lo"), py::arg("n_hi"), py::arg("d_lo"), py::arg("d_hi"));

    m.def(
        "verify_chow_tangent",
        [](int n, int s, std::uint64_t seed, const std::string& prime,
           bool rationals) {
            return report_dict(chowlab::verify_chow_tangent(
                field_from_args(prime, rationals), n, s, seed));
        },
        py::arg("n"), py::arg("s"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647", py::arg("rationals") = false);
    m.def(
        "verify_terracini",
        [](int n, int d, std::uint64_t seed, const std::string& prime) {
            return report_dict(chowlab::verify_terracini(
                Field::prime(mpz_class(prime)), n, d, seed));
        },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");
    m.def(
        "verify_chow_degree",
        [](int n, int s, std::uint64_t seed, const std::string& prime) {
            return report_dict(chowlab::verify_chow_degree(
                Field::prime(mpz_class(prime)), n, s, seed));
        },
        py::arg("n"), py::arg("s"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");
    m.def(
        "verify_smoothness_case",
        [](int n, int d, std::uint64_t seed, const std::string& prime) {
            return report_dict(decomp::verify_smoothness_case(
                Field::prime(mpz_class(prime)), n, d, seed));
        },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");
    m.def(
        "verify_roundtrip",
        [](int n, int d, std::uint64_t seed, const std::string& prime) {
            return report_dict(decomp::verify_roundtrip(
                Field::prime(mpz_class(prime)), n, d, seed));
        },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");
    m.def(
        "smin_oracle",
        [](int n, int d, std::uint64_t seed, const std::string& prime) {
            return chowlab::smin_oracle(Field::prime(mpz_class(prime)), n, d,
                                        seed);
        },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");

    m.def(
        "synth_instance_json",
        [](int n, int d, int s, std::uint64_t seed, const std::string& prime) {
            auto inst = decomp::synth_instance(Field::prime(mpz_class(prime)),
                                               n, d, s, seed);
            return serialize::instance_to_json(inst).dump();
        },
        py::arg("n"), py::arg("d"), py::arg("s"), py::arg("seed") = 0,
        py::arg("prime") = "2147483647");
    m.def(
        "decompose_json",
        [](const std::string& instance_json, std::uint64_t seed) {
            auto inst = serialize::instance_from_json(
                nlohmann::json::parse(instance_json));
            if (!decomp::forward_check(inst.f, inst.hyperplanes))
                return std::string();
            auto plan = decomp::SamplingPlan::standard(inst.n, inst.d, seed);
            auto rec = decomp::reconstruct(inst.f, inst.hyperplanes, plan);
            if (!rec) return std::string();
            return serialize::instance_to_json(*rec).dump();
        },
        py::arg("instance_json"), py::arg("seed") = 0);
    m.def(
        "vsh_point_count",
        [](int n, int d, int s, const std::string& p, std::uint64_t seed,
           long guard) {
            Field F = Field::prime(mpz_class(p));
            Rng rng(seed);
            auto f = polyring::random_form(F, n, d, Ring::S, rng);
            return decomp::vsh_point_count(f, s, guard);
        },
        py::arg("n"), py::arg("d"), py::arg("s"), py::arg("p") = "11",
        py::arg("seed") = 0, py::arg("guard") = chowlab::kDefaultEnumGuard);
}
