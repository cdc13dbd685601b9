#pragma once

#include <nlohmann/json.hpp>

#include "chowforms/decomp.hpp"
#include "chowforms/formulas.hpp"

namespace chowforms::serialize {

using nlohmann::json;

// Big integers always travel as decimal strings.

json field_to_json(const exactalg::Field& f);
exactalg::Field field_from_json(const json& j);

json form_to_json(const polyring::Form& f);
polyring::Form form_from_json(const json& j);

json linear_to_json(const polyring::LinearForm& l);
polyring::LinearForm linear_from_json(const json& j,
                                      const exactalg::Field& field,
                                      polyring::Ring ring);

json instance_to_json(const decomp::CodimOneInstance& inst);
decomp::CodimOneInstance instance_from_json(const json& j);

json report_to_json(const chowlab::VerificationReport& r);

json profile_to_json(const formulas::WaringProfile& p);
// CSV columns d,n,s,degree (the shape of the published table).
std::string profile_csv_row(const formulas::WaringProfile& p);

}  // namespace chowforms::serialize
