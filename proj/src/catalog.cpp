#include "catalog.hpp"

#include <fstream>

#include <json.hpp>

#include "error.hpp"
#include "presentation.hpp"

namespace wk {

namespace {

using nlohmann::json;

CatalogEntry parse_entry(const json& j) {
    if (!j.is_object())
        fail(Errc::SchemaError, "catalog entry is not an object");
    CatalogEntry e;
    if (!j.contains("name") || !j["name"].is_string())
        fail(Errc::SchemaError, "catalog entry missing string 'name'");
    e.name = j["name"].get<std::string>();
    if (!j.contains("gauss_code") || !j["gauss_code"].is_string())
        fail(Errc::SchemaError, "entry '" + e.name + "' missing string 'gauss_code'");
    try {
        e.diagram = parse_diagram(j["gauss_code"].get<std::string>());
    } catch (const Error& err) {
        fail(Errc::SchemaError,
             "entry '" + e.name + "' has a bad gauss_code: " + err.what());
    }
    if (!j.contains("unknotting_number"))
        fail(Errc::SchemaError, "entry '" + e.name + "' missing 'unknotting_number'");
    if (j["unknotting_number"].is_null())
        e.unknotting_number = std::nullopt;
    else if (j["unknotting_number"].is_number_integer())
        e.unknotting_number = j["unknotting_number"].get<int>();
    else
        fail(Errc::SchemaError, "entry '" + e.name + "': unknotting_number must be int or null");
    if (!j.contains("fingerprint") || !j["fingerprint"].is_object())
        fail(Errc::SchemaError, "entry '" + e.name + "' missing object 'fingerprint'");
    const json& fp = j["fingerprint"];
    if (!fp.contains("colorings") || !fp["colorings"].is_object())
        fail(Errc::SchemaError, "entry '" + e.name + "' missing fingerprint.colorings");
    const json& cols = fp["colorings"];
    const char* keys[3] = {"3", "5", "7"};
    for (int i = 0; i < 3; ++i) {
        if (!cols.contains(keys[i]) || !cols[keys[i]].is_number_integer())
            fail(Errc::SchemaError,
                 "entry '" + e.name + "' missing coloring count for m=" + keys[i]);
        e.colorings[static_cast<size_t>(i)] = cols[keys[i]].get<long>();
    }
    if (!fp.contains("alexander") || !fp["alexander"].is_array())
        fail(Errc::SchemaError, "entry '" + e.name + "' missing fingerprint.alexander");
    for (const json& c : fp["alexander"]) {
        if (!c.is_number_integer())
            fail(Errc::SchemaError, "entry '" + e.name + "': alexander coefficients must be ints");
        e.alexander_coeffs.push_back(c.get<long>());
    }
    if (e.alexander_coeffs.empty())
        fail(Errc::SchemaError, "entry '" + e.name + "': alexander must be nonempty");
    return e;
}

void check_fingerprint(const CatalogEntry& e) {
    static const long ms[3] = {3, 5, 7};
    for (int i = 0; i < 3; ++i) {
        Int got = coloring_count(e.diagram.code, ms[i]).total;
        if (got != e.colorings[static_cast<size_t>(i)])
            fail(Errc::FingerprintMismatch,
                 e.name + ": coloring count mod " + std::to_string(ms[i]) +
                     " is " + got.get_str() + ", catalog says " +
                     std::to_string(e.colorings[static_cast<size_t>(i)]));
    }
    std::vector<Int> got = alexander(e.diagram.code).coeff_vector();
    bool same = got.size() == e.alexander_coeffs.size();
    for (size_t i = 0; same && i < got.size(); ++i)
        same = got[i] == e.alexander_coeffs[i];
    if (!same)
        fail(Errc::FingerprintMismatch, e.name + ": alexander coefficients disagree");
}

} // namespace

std::vector<CatalogEntry> catalog_load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::IoError, "cannot open catalog file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        fail(Errc::SchemaError, "catalog is not valid JSON: " + std::string(ex.what()));
    }
    if (!doc.is_array())
        fail(Errc::SchemaError, "catalog root must be an array");
    std::vector<CatalogEntry> out;
    for (const json& j : doc) {
        CatalogEntry e = parse_entry(j);
        check_fingerprint(e);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace wk
