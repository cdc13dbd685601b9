#include "chowforms/serialize.hpp"

namespace chowforms::serialize {

using exactalg::Field;
using exactalg::Scalar;
using polyring::Form;
using polyring::LinearForm;
using polyring::Ring;

namespace {

std::string scalar_str(const Scalar& s) { return s.get_str(); }

std::vector<std::string> coeff_strings(const std::vector<Scalar>& cs) {
    std::vector<std::string> out;
    out.reserve(cs.size());
    for (const Scalar& c : cs) out.push_back(scalar_str(c));
    return out;
}

std::vector<Scalar> coeffs_from(const json& arr, const Field& field) {
    std::vector<Scalar> out;
    out.reserve(arr.size());
    for (const auto& v : arr)
        out.push_back(field.from_string(v.get<std::string>()));
    return out;
}

Ring ring_from(const std::string& s) {
    if (s == "S") return Ring::S;
    if (s == "T") return Ring::T;
    throw DomainError("ring must be \"S\" or \"T\"");
}

}  // namespace

json field_to_json(const Field& f) {
    if (f.is_prime_field())
        return json{{"kind", "prime"}, {"modulus", f.modulus().get_str()}};
    return json{{"kind", "rationals"}};
}

Field field_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime")
        return Field::prime(mpz_class(j.at("modulus").get<std::string>()));
    if (kind == "rationals") return Field::rationals();
    throw DomainError("unknown field kind: " + kind);
}

json form_to_json(const Form& f) {
    return json{{"n", f.n()},
                {"degree", f.degree()},
                {"ring", f.ring() == Ring::S ? "S" : "T"},
                {"field", field_to_json(f.field())},
                {"coeffs", coeff_strings(f.coeffs())}};
}

Form form_from_json(const json& j) {
    Field field = field_from_json(j.at("field"));
    return Form(field, j.at("n").get<int>(), j.at("degree").get<int>(),
                ring_from(j.at("ring").get<std::string>()),
                coeffs_from(j.at("coeffs"), field));
}

json linear_to_json(const LinearForm& l) {
    return json{{"ring", l.ring() == Ring::S ? "S" : "T"},
                {"coeffs", coeff_strings(l.coeffs())}};
}

LinearForm linear_from_json(const json& j, const Field& field, Ring ring) {
    if (j.is_array()) return LinearForm(field, ring, coeffs_from(j, field));
    return LinearForm(field, ring_from(j.at("ring").get<std::string>()),
                      coeffs_from(j.at("coeffs"), field));
}

json instance_to_json(const decomp::CodimOneInstance& inst) {
    json hyps = json::array();
    for (const LinearForm& l : inst.hyperplanes)
        hyps.push_back(linear_to_json(l));
    json j{{"n", inst.n},
           {"d", inst.d},
           {"s", inst.s},
           {"form", form_to_json(inst.f)},
           {"hyperplanes", hyps}};
    if (!inst.summands.empty()) {
        json sums = json::array();
        for (const Form& g : inst.summands) sums.push_back(form_to_json(g));
        j["summands"] = sums;
    }
    return j;
}

decomp::CodimOneInstance instance_from_json(const json& j) {
    Form f = form_from_json(j.at("form"));
    std::vector<LinearForm> hyps;
    for (const auto& h : j.at("hyperplanes"))
        hyps.push_back(linear_from_json(h, f.field(), Ring::T));
    std::vector<Form> summands;
    if (j.contains("summands"))
        for (const auto& g : j.at("summands"))
            summands.push_back(form_from_json(g));
    decomp::CodimOneInstance inst{f.n(),
                                  f.degree(),
                                  static_cast<int>(hyps.size()),
                                  std::move(f),
                                  std::move(hyps),
                                  std::move(summands)};
    return inst;
}

json report_to_json(const chowlab::VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json computed = json::object(), expected = json::object();
    for (const auto& [k, v] : r.computed) computed[k] = v.get_str();
    for (const auto& [k, v] : r.expected) expected[k] = v.get_str();
    return json{{"oracle", r.oracle_name},
                {"params", params},
                {"seed", r.seed},
                {"field", field_to_json(r.field)},
                {"computed", computed},
                {"expected", expected},
                {"pass", r.pass},
                {"retries_used", r.retries_used}};
}

json profile_to_json(const formulas::WaringProfile& p) {
    return json{{"n", p.n},
                {"d", p.d},
                {"smin", p.smin},
                {"sexp", p.sexp},
                {"sstar", p.sstar},
                {"ah_rank", p.ah_rank.get_str()},
                {"defective", p.defective},
                {"vsh_dim", p.vsh_dim},
                {"vsh_degree", p.vsh_degree.get_str()},
                {"chow_dim", p.chow_dim},
                {"vhat_dim", p.vhat_dim}};
}

std::string profile_csv_row(const formulas::WaringProfile& p) {
    return std::to_string(p.d) + "," + std::to_string(p.n) + "," +
           std::to_string(p.smin) + "," + p.vsh_degree.get_str();
}

}  // namespace chowforms::serialize
