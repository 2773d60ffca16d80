#include "waring/json_io.hpp"

#include "waring/errors.hpp"

namespace waring {

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(errc::bad_input, std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

std::string get_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(errc::bad_input, std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

} // namespace

json matrix_to_json(const UTMatrix& a) {
    json entries = json::array();
    for (const auto& [pos, value] : a.entries()) {
        entries.push_back(json{{"row", pos.first},
                               {"col", pos.second},
                               {"value", value.to_string()}});
    }
    return json{{"n", a.n()}, {"entries", std::move(entries)}};
}

UTMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw Error(errc::bad_input, "matrix must be a JSON object");
    UTMatrix a(get_int(j, "n"));
    if (!j.contains("entries")) return a;
    if (!j["entries"].is_array())
        throw Error(errc::bad_input, "matrix 'entries' must be an array");
    for (const auto& e : j["entries"]) {
        const int row = get_int(e, "row");
        const int col = get_int(e, "col");
        if (row < 1 || col < row || col > a.n())
            throw Error(errc::bad_input, "matrix entry position out of range");
        if (!a.get(row, col).is_zero())
            throw Error(errc::bad_input, "duplicate matrix entry");
        a.set(row, col, Rational::from_string(get_string(e, "value")));
    }
    return a;
}

json order_report_to_json(const OrderReport& report) {
    json j{{"order", report.order},
           {"certificate", nullptr},
           {"checkedUpTo", report.checked_up_to}};
    if (report.certificate) j["certificate"] = *report.certificate;
    return j;
}

json bundle_to_json(const WitnessBundle& bundle) {
    json tuples = json::array();
    for (const auto& tuple : bundle.tuples) {
        json row = json::array();
        for (const auto& mat : tuple) row.push_back(matrix_to_json(mat));
        tuples.push_back(std::move(row));
    }
    return json{{"poly", bundle.poly.str()},
                {"n", bundle.n},
                {"mode", bundle.mode == WitnessMode::single ? "single" : "sum"},
                {"tuples", std::move(tuples)},
                {"target", matrix_to_json(bundle.target)},
                {"verified", bundle.verified},
                {"seed", bundle.seed}};
}

WitnessBundle bundle_from_json(const json& j) {
    if (!j.is_object()) throw Error(errc::bad_input, "bundle must be a JSON object");
    WitnessBundle bundle;
    bundle.poly = NcPoly::parse(get_string(j, "poly"));
    bundle.n = get_int(j, "n");
    const std::string mode = get_string(j, "mode");
    if (mode == "single")
        bundle.mode = WitnessMode::single;
    else if (mode == "sum")
        bundle.mode = WitnessMode::sum;
    else
        throw Error(errc::bad_input, "mode must be 'single' or 'sum'");
    if (!j.contains("tuples") || !j["tuples"].is_array())
        throw Error(errc::bad_input, "bundle 'tuples' must be an array");
    for (const auto& row : j["tuples"]) {
        if (!row.is_array()) throw Error(errc::bad_input, "each tuple must be an array");
        std::vector<UTMatrix> tuple;
        for (const auto& mat : row) tuple.push_back(matrix_from_json(mat));
        bundle.tuples.push_back(std::move(tuple));
    }
    if (!j.contains("target")) throw Error(errc::bad_input, "bundle needs a 'target'");
    bundle.target = matrix_from_json(j["target"]);
    if (j.contains("verified")) {
        if (!j["verified"].is_boolean()) throw Error(errc::bad_input, "'verified' must be a bool");
        bundle.verified = j["verified"].get<bool>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            throw Error(errc::bad_input, "'seed' must be an integer");
        bundle.seed = j["seed"].get<std::uint64_t>();
    }
    return bundle;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
}

} // namespace waring
