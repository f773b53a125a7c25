// Exercises the shared-library C API end to end: round-trips, JSON shapes,
// status mapping and string ownership. Links only against weldkit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include <json.hpp>

#include "weldkit/weldkit.h"

using nlohmann::json;

namespace {

constexpr const char* TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+";

struct DiagramDeleter {
    void operator()(wk_diagram* d) const { wk_diagram_free(d); }
};
using DiagramPtr = std::unique_ptr<wk_diagram, DiagramDeleter>;

struct CatalogDeleter {
    void operator()(wk_catalog* c) const { wk_catalog_free(c); }
};
using CatalogPtr = std::unique_ptr<wk_catalog, CatalogDeleter>;

DiagramPtr parse_ok(const char* text) {
    wk_diagram* d = nullptr;
    REQUIRE(wk_diagram_parse(text, &d) == WK_OK);
    REQUIRE(d != nullptr);
    return DiagramPtr(d);
}

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    wk_string_free(s);
    return out;
}

std::string serialize_of(const wk_diagram* d) {
    char* s = nullptr;
    REQUIRE(wk_diagram_serialize(d, &s) == WK_OK);
    return take(s);
}

} // namespace

TEST_CASE("diagram parse, serialize and json round-trip") {
    DiagramPtr d = parse_ok(TREFOIL);
    CHECK(serialize_of(d.get()) == TREFOIL);

    int n = -1;
    REQUIRE(wk_diagram_crossing_count(d.get(), &n) == WK_OK);
    CHECK(n == 3);

    char* js = nullptr;
    REQUIRE(wk_diagram_json(d.get(), &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["code"] == TREFOIL);
    CHECK(j["crossings"] == 3);
    CHECK(j["welded"].empty());

    DiagramPtr empty = parse_ok("");
    CHECK(serialize_of(empty.get()).empty());
    REQUIRE(wk_diagram_crossing_count(empty.get(), &n) == WK_OK);
    CHECK(n == 0);
}

TEST_CASE("parse failures map to distinct statuses") {
    wk_diagram* d = nullptr;
    CHECK(wk_diagram_parse("O1+ banana", &d) == WK_EMALFORMED_TOKEN);
    CHECK(std::string(wk_last_error()).find("banana") != std::string::npos);
    CHECK(wk_diagram_parse("O1+", &d) == WK_ECROSSING_COUNT);
    CHECK(wk_diagram_parse("O1+ O1+", &d) == WK_EDUPLICATE_ROLE);
    CHECK(wk_diagram_parse("O1+ U1-", &d) == WK_ESIGN_MISMATCH);
    CHECK(wk_diagram_parse(nullptr, &d) == WK_EBAD_ARGUMENT);
    CHECK(std::string(wk_last_error()).find("wk_diagram_parse") != std::string::npos);
}

TEST_CASE("canonical is rotation invariant") {
    DiagramPtr a = parse_ok("O1+ U2+ O3+ U1+ O2+ U3+");
    DiagramPtr b = parse_ok("U3+ O1+ U2+ O3+ U1+ O2+");
    wk_diagram* ca = nullptr;
    wk_diagram* cb = nullptr;
    REQUIRE(wk_diagram_canonical(a.get(), &ca) == WK_OK);
    REQUIRE(wk_diagram_canonical(b.get(), &cb) == WK_OK);
    DiagramPtr pa(ca), pb(cb);
    CHECK(serialize_of(pa.get()) == serialize_of(pb.get()));
}

TEST_CASE("welding removes crossings and records history") {
    DiagramPtr d = parse_ok(TREFOIL);
    int labels[1] = {3};
    wk_diagram* w = nullptr;
    REQUIRE(wk_diagram_weld(d.get(), labels, 1, &w) == WK_OK);
    DiagramPtr pw(w);
    CHECK(serialize_of(pw.get()) == "O1+ U2+ U1+ O2+");

    char* js = nullptr;
    REQUIRE(wk_diagram_json(pw.get(), &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["welded"] == json::array({3}));

    int bad[1] = {9};
    wk_diagram* w2 = nullptr;
    CHECK(wk_diagram_weld(d.get(), bad, 1, &w2) == WK_EUNKNOWN_CROSSING);
}

TEST_CASE("simplify reports trace and search stats") {
    DiagramPtr d = parse_ok("O4+ U3- U1+ O2+ U4+ O1+ O3- U2+");
    char* js = nullptr;
    REQUIRE(wk_simplify(d.get(), 1000, &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["crossings"] == 0);
    CHECK(j["result"] == "");
    CHECK(j["states"] == 5);
    CHECK(j["budget_exhausted"] == false);
    REQUIRE(!j["trace"].empty());
    CHECK(j["trace"][0].contains("kind"));
    CHECK(j["trace"][0].contains("location"));

    DiagramPtr tref = parse_ok(TREFOIL);
    REQUIRE(wk_simplify(tref.get(), 1000, &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["crossings"] == 3);
    CHECK(j["budget_exhausted"] == false);
}

TEST_CASE("descending and warping") {
    DiagramPtr tref = parse_ok(TREFOIL);
    char* js = nullptr;
    REQUIRE(wk_descending(tref.get(), &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["descending"] == false);
    CHECK(j["basepoint"].is_null());

    REQUIRE(wk_warping(tref.get(), &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["forward"] == 1);
    CHECK(j["reverse"] == 1);

    DiagramPtr curl = parse_ok("O1+ U1+");
    REQUIRE(wk_descending(curl.get(), &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["descending"] == true);
    CHECK(j["basepoint"] == 0);
}

TEST_CASE("verdict json carries witness or certificate") {
    DiagramPtr tref = parse_ok(TREFOIL);
    char* js = nullptr;
    REQUIRE(wk_verdict(tref.get(), 10000, &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["status"] == "Knotted");
    CHECK(j["witness"].is_null());
    REQUIRE(j["certificate"].is_object());
    CHECK(j["certificate"]["kind"] == "dihedral");
    CHECK(j["certificate"]["m"] == 3);

    wk_diagram* dw = nullptr;
    REQUIRE(wk_family_torus(1, 1, 0, &dw) == WK_OK);
    DiagramPtr w(dw);
    REQUIRE(wk_verdict(w.get(), 10000, &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["status"] == "Unknot");
    REQUIRE(j["witness"].is_object());
    CHECK(j["witness"]["kind"] == "warping0");
    CHECK(j["witness"]["orientation"] == "forward");
    CHECK(j["certificate"].is_null());

    CHECK(wk_verdict(tref.get(), 0, &js) == WK_EBAD_PARAMETER);
}

TEST_CASE("unknotting bounds") {
    DiagramPtr tref = parse_ok(TREFOIL);
    char* js = nullptr;
    REQUIRE(wk_uw_bounds(tref.get(), 10000, &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["lower"] == 1);
    CHECK(j["upper"] == 1);
    CHECK(j["unresolved"] == 0);
}

TEST_CASE("group pipeline over the C API") {
    DiagramPtr tref = parse_ok(TREFOIL);
    char* js = nullptr;

    REQUIRE(wk_group_wirtinger(tref.get(), &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["ngens"] == 3);
    CHECK(j["relators"].size() == 3);
    CHECK(j["relators"][0].size() == 4);
    CHECK(j["relators"][0][0].size() == 2);
    CHECK(j["display"].get<std::string>().find('|') != std::string::npos);

    REQUIRE(wk_group_abelianization(tref.get(), &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["free_rank"] == 1);
    CHECK(j["invariant_factors"] == json::array({"1", "1", "0"}));

    REQUIRE(wk_group_alexander(tref.get(), &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["coefficients"] == json::array({"1", "-1", "1"}));
    CHECK(j["display"].get<std::string>().find('t') != std::string::npos);

    REQUIRE(wk_group_tietze(tref.get(), 50000, &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["certificate"] == "Unknown");

    wk_diagram* dw = nullptr;
    REQUIRE(wk_family_torus(1, 1, 0, &dw) == WK_OK);
    DiagramPtr w(dw);
    REQUIRE(wk_group_tietze(w.get(), 50000, &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["ngens"] == 1);
    CHECK(j["relators"].empty());
    CHECK(j["certificate"] == "Proved");
}

TEST_CASE("colorings") {
    DiagramPtr tref = parse_ok(TREFOIL);
    char* js = nullptr;
    REQUIRE(wk_colorings(tref.get(), 3, &js) == WK_OK);
    json j = json::parse(take(js));
    CHECK(j["m"] == 3);
    CHECK(j["total"] == "9");
    CHECK(j["nontrivial"] == true);

    REQUIRE(wk_colorings(tref.get(), 5, &js) == WK_OK);
    j = json::parse(take(js));
    CHECK(j["total"] == "5");
    CHECK(j["nontrivial"] == false);

    CHECK(wk_colorings(tref.get(), 1, &js) == WK_EBAD_MODULUS);
}

TEST_CASE("family constructors") {
    wk_diagram* d = nullptr;

    REQUIRE(wk_family_torus(1, 0, 0, &d) == WK_OK);
    DiagramPtr t1(d);
    CHECK(serialize_of(t1.get()) == TREFOIL);

    REQUIRE(wk_family_torus(2, 2, 0, &d) == WK_OK);
    DiagramPtr t2(d);
    CHECK(serialize_of(t2.get()) == "O3+ U4+ O5+ U3+ O4+ U5+");

    REQUIRE(wk_family_twist(2, 0, &d) == WK_OK);
    DiagramPtr tw2(d);
    CHECK(serialize_of(tw2.get()) == "U1- O2- U3+ O4+ U2- O1- U4+ O3+");

    REQUIRE(wk_family_twist(4, 2, &d) == WK_OK);
    DiagramPtr tw4(d);
    CHECK(serialize_of(tw4.get()) == "O2- O4- U5+ O6+ U4- U2- U6+ O5+");

    CHECK(wk_family_torus(0, 0, 0, &d) == WK_EBAD_PARAMETER);
    CHECK(wk_family_torus(3, 2, 5, &d) == WK_EBAD_GAP);
    CHECK(wk_family_torus(1, 3, 0, &d) == WK_EBAD_ARGUMENT);
    CHECK(wk_family_twist(3, 2, &d) == WK_EBAD_PARAMETER);
}

TEST_CASE("catalog access and table rendering") {
    wk_catalog* c = nullptr;
    REQUIRE(wk_catalog_open(WK_DATA_DIR "/rolfsen.json", &c) == WK_OK);
    CatalogPtr cat(c);

    char* js = nullptr;
    REQUIRE(wk_catalog_names(cat.get(), &js) == WK_OK);
    json names = json::parse(take(js));
    REQUIRE(names.size() == 7);
    CHECK(names[0] == "3_1");
    CHECK(names[6] == "6_3");

    REQUIRE(wk_catalog_entry(cat.get(), "4_1", &js) == WK_OK);
    json e = json::parse(take(js));
    CHECK(e["fingerprint"]["colorings"]["5"] == 25);
    CHECK(e["unknotting_number"] == 1);

    wk_diagram* d = nullptr;
    REQUIRE(wk_catalog_diagram(cat.get(), "3_1", &d) == WK_OK);
    DiagramPtr p31(d);
    CHECK(serialize_of(p31.get()) == TREFOIL);

    CHECK(wk_catalog_diagram(cat.get(), "9_99", &d) == WK_ECATALOG_MISSING);

    wk_catalog* bad = nullptr;
    CHECK(wk_catalog_open(WK_DATA_DIR "/nope.json", &bad) == WK_EIO);

    REQUIRE(wk_table_six(cat.get(), "1", 100000, 0, &js) == WK_OK);
    json t = json::parse(take(js));
    REQUIRE(t["knots"].size() == 3);
    CHECK(t["knots"][0]["name"] == "6_1");
    CHECK(t["knots"][0]["sections"][0]["z"] == 6);

    REQUIRE(wk_table_six(cat.get(), "1", 100000, 1, &js) == WK_OK);
    std::string text = take(js);
    CHECK(text.find("== 6_1 ==") != std::string::npos);

    CHECK(wk_table_six(cat.get(), "x", 100000, 0, &js) == WK_EBAD_ARGUMENT);
    CHECK(wk_table_six(cat.get(), "4", 100000, 0, &js) == WK_EBAD_ARGUMENT);
    CHECK(wk_table_six(cat.get(), "", 100000, 0, &js) == WK_EBAD_ARGUMENT);
}
