#pragma once

#include <nlohmann/json.hpp>

#include "waring/structure.hpp"
#include "waring/witness.hpp"

namespace waring {

using json = nlohmann::ordered_json;

// Matrices travel as {"n": int, "entries": [{"row", "col", "value"}...]}
// with values as exact rational strings and omitted entries meaning zero.
json matrix_to_json(const UTMatrix& a);
UTMatrix matrix_from_json(const json& j);

json order_report_to_json(const OrderReport& report);

json bundle_to_json(const WitnessBundle& bundle);
WitnessBundle bundle_from_json(const json& j);

// Wraps nlohmann parse errors into errc::bad_input.
json parse_json_text(const std::string& text);

} // namespace waring
