#include "weldkit/weldkit.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "families.hpp"
#include "gauss.hpp"
#include "moves.hpp"
#include "presentation.hpp"
#include "warping.hpp"

using nlohmann::json;

struct wk_diagram {
    wk::Diagram d;
};

struct wk_catalog {
    std::vector<wk::CatalogEntry> entries;
};

namespace {

thread_local std::string t_last_error;

wk_status map_errc(wk::Errc c) {
    switch (c) {
        case wk::Errc::MalformedToken: return WK_EMALFORMED_TOKEN;
        case wk::Errc::CrossingCountNotTwo: return WK_ECROSSING_COUNT;
        case wk::Errc::DuplicateRole: return WK_EDUPLICATE_ROLE;
        case wk::Errc::SignMismatch: return WK_ESIGN_MISMATCH;
        case wk::Errc::UnknownCrossing: return WK_EUNKNOWN_CROSSING;
        case wk::Errc::InapplicableMove: return WK_EINAPPLICABLE_MOVE;
        case wk::Errc::BadModulus: return WK_EBAD_MODULUS;
        case wk::Errc::NotRankOne: return WK_ENOT_RANK_ONE;
        case wk::Errc::BadGap: return WK_EBAD_GAP;
        case wk::Errc::BadParameter: return WK_EBAD_PARAMETER;
        case wk::Errc::IoError: return WK_EIO;
        case wk::Errc::SchemaError: return WK_ESCHEMA;
        case wk::Errc::FingerprintMismatch: return WK_EFINGERPRINT;
        case wk::Errc::CatalogMissing: return WK_ECATALOG_MISSING;
        case wk::Errc::InternalInconsistency: return WK_EINTERNAL;
        case wk::Errc::BadArgument: return WK_EBAD_ARGUMENT;
    }
    return WK_EINTERNAL;
}

template <typename F>
wk_status guard(F&& f) {
    try {
        f();
        return WK_OK;
    } catch (const wk::Error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return WK_EINTERNAL;
    }
}

wk_status arg_error(const char* msg) {
    t_last_error = msg;
    return WK_EBAD_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json move_json(const wk::MoveInstance& mv) {
    return json{{"kind", wk::move_kind_name(mv.kind)},
                {"location", mv.location},
                {"sign", mv.sign},
                {"over_first", mv.over_first}};
}

json trace_json(const std::vector<wk::MoveInstance>& trace) {
    json arr = json::array();
    for (const auto& mv : trace) arr.push_back(move_json(mv));
    return arr;
}

json presentation_json(const wk::Presentation& p) {
    json rels = json::array();
    for (const wk::Word& w : p.relators) {
        json word = json::array();
        for (const wk::Letter& l : w) word.push_back(json::array({l.gen, l.exp}));
        rels.push_back(std::move(word));
    }
    return json{{"ngens", p.ngens}, {"relators", rels}, {"display", wk::presentation_str(p)}};
}

const wk::CatalogEntry& find_entry(const wk_catalog* c, const char* name) {
    for (const auto& e : c->entries)
        if (e.name == name) return e;
    wk::fail(wk::Errc::CatalogMissing, "catalog has no entry " + std::string(name));
}

} // namespace

extern "C" {

const char* wk_last_error(void) { return t_last_error.c_str(); }

void wk_string_free(char* s) { std::free(s); }

wk_status wk_diagram_parse(const char* text, wk_diagram** out) {
    if (!text || !out) return arg_error("wk_diagram_parse: null argument");
    return guard([&] { *out = new wk_diagram{wk::parse_diagram(text)}; });
}

void wk_diagram_free(wk_diagram* d) { delete d; }

wk_status wk_diagram_serialize(const wk_diagram* d, char** out) {
    if (!d || !out) return arg_error("wk_diagram_serialize: null argument");
    return guard([&] { *out = dup_string(wk::serialize(d->d.code)); });
}

wk_status wk_diagram_json(const wk_diagram* d, char** out) {
    if (!d || !out) return arg_error("wk_diagram_json: null argument");
    return guard([&] {
        json j{{"code", wk::serialize(d->d.code)},
               {"crossings", wk::crossing_count(d->d.code)},
               {"welded", d->d.welded_history}};
        *out = dup_string(j.dump());
    });
}

wk_status wk_diagram_crossing_count(const wk_diagram* d, int* out) {
    if (!d || !out) return arg_error("wk_diagram_crossing_count: null argument");
    return guard([&] { *out = wk::crossing_count(d->d.code); });
}

wk_status wk_diagram_canonical(const wk_diagram* d, wk_diagram** out) {
    if (!d || !out) return arg_error("wk_diagram_canonical: null argument");
    return guard([&] {
        *out = new wk_diagram{wk::Diagram{wk::canonical(d->d.code), d->d.welded_history}};
    });
}

wk_status wk_diagram_weld(const wk_diagram* d, const int* labels, size_t nlabels,
                          wk_diagram** out) {
    if (!d || !out || (nlabels > 0 && !labels))
        return arg_error("wk_diagram_weld: null argument");
    return guard([&] {
        std::vector<int> ls(labels, labels + nlabels);
        *out = new wk_diagram{wk::weld_set(d->d, ls)};
    });
}

wk_status wk_simplify(const wk_diagram* d, uint64_t budget, char** json_out) {
    if (!d || !json_out) return arg_error("wk_simplify: null argument");
    return guard([&] {
        wk::SimplifyReport rep = wk::simplify(d->d, budget);
        json j{{"result", wk::serialize(rep.result.code)},
               {"crossings", wk::crossing_count(rep.result.code)},
               {"states", rep.states_explored},
               {"budget_exhausted", rep.budget_exhausted},
               {"trace", trace_json(rep.trace)}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_descending(const wk_diagram* d, char** json_out) {
    if (!d || !json_out) return arg_error("wk_descending: null argument");
    return guard([&] {
        auto b = wk::is_descending(d->d.code);
        json j{{"descending", b.has_value()}, {"basepoint", b ? json(*b) : json(nullptr)}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_warping(const wk_diagram* d, char** json_out) {
    if (!d || !json_out) return arg_error("wk_warping: null argument");
    return guard([&] {
        wk::WarpingPair wp = wk::warping_pair(d->d.code);
        json j{{"forward", wp.forward}, {"reverse", wp.reverse}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_verdict(const wk_diagram* d, uint64_t budget, char** json_out) {
    if (!d || !json_out) return arg_error("wk_verdict: null argument");
    return guard([&] {
        wk::TrivialityVerdict v = wk::triviality_verdict(d->d.code, budget);
        json witness = nullptr;
        if (v.witness) {
            witness = json{{"kind", wk::unknot_witness_name(*v.witness)}};
            switch (*v.witness) {
                case wk::UnknotWitnessKind::WarpingZero:
                    witness["basepoint"] = v.basepoint;
                    witness["orientation"] =
                        v.orientation == wk::Orientation::Forward ? "forward" : "reverse";
                    break;
                case wk::UnknotWitnessKind::SimplifiedEmpty:
                    witness["trace"] = trace_json(v.trace);
                    witness["states"] = v.states_explored;
                    break;
                case wk::UnknotWitnessKind::ResidualWarpingZero:
                    witness["trace"] = trace_json(v.trace);
                    witness["states"] = v.states_explored;
                    witness["residual"] = wk::serialize(v.residual);
                    witness["basepoint"] = v.basepoint;
                    witness["orientation"] =
                        v.orientation == wk::Orientation::Forward ? "forward" : "reverse";
                    break;
            }
        }
        json cert = nullptr;
        if (v.certificate) {
            cert = json{{"kind", wk::knotted_certificate_name(*v.certificate)}};
            if (*v.certificate == wk::KnottedCertificateKind::Dihedral) {
                cert["m"] = v.dihedral_m;
            } else {
                json coeffs = json::array();
                for (const wk::Int& c : v.alexander_poly.coeff_vector())
                    coeffs.push_back(c.get_str());
                cert["coefficients"] = coeffs;
                cert["display"] = v.alexander_poly.str();
            }
        }
        json j{{"status", wk::verdict_status_name(v.status)},
               {"witness", witness},
               {"certificate", cert}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_uw_bounds(const wk_diagram* d, uint64_t budget, char** json_out) {
    if (!d || !json_out) return arg_error("wk_uw_bounds: null argument");
    return guard([&] {
        wk::UnknottingBounds b = wk::welded_unknotting_bounds(d->d.code, budget);
        json j{{"lower", b.lower}, {"upper", b.upper}, {"unresolved", b.unresolved}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_group_wirtinger(const wk_diagram* d, char** json_out) {
    if (!d || !json_out) return arg_error("wk_group_wirtinger: null argument");
    return guard([&] {
        *json_out = dup_string(presentation_json(wk::wirtinger(d->d.code)).dump());
    });
}

wk_status wk_group_tietze(const wk_diagram* d, uint64_t budget, char** json_out) {
    if (!d || !json_out) return arg_error("wk_group_tietze: null argument");
    return guard([&] {
        wk::Presentation p = wk::tietze_simplify(wk::wirtinger(d->d.code), budget);
        json j = presentation_json(p);
        j["certificate"] =
            wk::infinite_cyclic_certificate(p, budget) == wk::Cert::Proved ? "Proved" : "Unknown";
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_group_abelianization(const wk_diagram* d, char** json_out) {
    if (!d || !json_out) return arg_error("wk_group_abelianization: null argument");
    return guard([&] {
        wk::Presentation p = wk::wirtinger(d->d.code);
        json factors = json::array();
        for (const wk::Int& f : wk::abelianization(p)) factors.push_back(f.get_str());
        json j{{"invariant_factors", factors}, {"free_rank", wk::free_rank(p)}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_group_alexander(const wk_diagram* d, char** json_out) {
    if (!d || !json_out) return arg_error("wk_group_alexander: null argument");
    return guard([&] {
        wk::Laurent a = wk::alexander(d->d.code);
        json coeffs = json::array();
        for (const wk::Int& c : a.coeff_vector()) coeffs.push_back(c.get_str());
        json j{{"coefficients", coeffs}, {"display", a.str()}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_colorings(const wk_diagram* d, long m, char** json_out) {
    if (!d || !json_out) return arg_error("wk_colorings: null argument");
    return guard([&] {
        wk::ColoringCount c = wk::coloring_count(d->d.code, m);
        json j{{"m", m}, {"total", c.total.get_str()}, {"nontrivial", c.nontrivial}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_family_torus(int n, int welds, int m1, wk_diagram** out) {
    if (!out) return arg_error("wk_family_torus: null argument");
    return guard([&] {
        switch (welds) {
            case 0: *out = new wk_diagram{wk::make_diagram(wk::torus_2q(n))}; break;
            case 1: *out = new wk_diagram{wk::torus_welded_one(n)}; break;
            case 2: *out = new wk_diagram{wk::torus_welded_two(n, m1)}; break;
            default: wk::fail(wk::Errc::BadArgument, "wk_family_torus: welds must be 0, 1 or 2");
        }
    });
}

wk_status wk_family_twist(int n, int welds, wk_diagram** out) {
    if (!out) return arg_error("wk_family_twist: null argument");
    return guard([&] {
        switch (welds) {
            case 0: *out = new wk_diagram{wk::make_diagram(wk::twist(n))}; break;
            case 1: *out = new wk_diagram{wk::twist_welded_one(n)}; break;
            case 2: *out = new wk_diagram{wk::twist_welded_two(n)}; break;
            default: wk::fail(wk::Errc::BadArgument, "wk_family_twist: welds must be 0, 1 or 2");
        }
    });
}

wk_status wk_catalog_open(const char* path, wk_catalog** out) {
    if (!path || !out) return arg_error("wk_catalog_open: null argument");
    return guard([&] { *out = new wk_catalog{wk::catalog_load(path)}; });
}

void wk_catalog_free(wk_catalog* c) { delete c; }

wk_status wk_catalog_names(const wk_catalog* c, char** json_out) {
    if (!c || !json_out) return arg_error("wk_catalog_names: null argument");
    return guard([&] {
        json names = json::array();
        for (const auto& e : c->entries) names.push_back(e.name);
        *json_out = dup_string(names.dump());
    });
}

wk_status wk_catalog_entry(const wk_catalog* c, const char* name, char** json_out) {
    if (!c || !name || !json_out) return arg_error("wk_catalog_entry: null argument");
    return guard([&] {
        const wk::CatalogEntry& e = find_entry(c, name);
        json cols;
        const char* keys[3] = {"3", "5", "7"};
        for (int i = 0; i < 3; ++i) cols[keys[i]] = e.colorings[static_cast<size_t>(i)];
        json j{{"name", e.name},
               {"gauss_code", wk::serialize(e.diagram.code)},
               {"unknotting_number",
                e.unknotting_number ? json(*e.unknotting_number) : json(nullptr)},
               {"fingerprint", {{"colorings", cols}, {"alexander", e.alexander_coeffs}}}};
        *json_out = dup_string(j.dump());
    });
}

wk_status wk_catalog_diagram(const wk_catalog* c, const char* name, wk_diagram** out) {
    if (!c || !name || !out) return arg_error("wk_catalog_diagram: null argument");
    return guard([&] { *out = new wk_diagram{find_entry(c, name).diagram}; });
}

wk_status wk_table_six(const wk_catalog* c, const char* sizes, uint64_t budget,
                       int as_text, char** out) {
    if (!c || !sizes || !out) return arg_error("wk_table_six: null argument");
    return guard([&] {
        std::vector<int> parsed;
        const char* p = sizes;
        while (*p) {
            char* end = nullptr;
            long v = std::strtol(p, &end, 10);
            if (end == p) wk::fail(wk::Errc::BadArgument, "wk_table_six: bad sizes list");
            parsed.push_back(static_cast<int>(v));
            p = end;
            if (*p == ',') ++p;
            else if (*p) wk::fail(wk::Errc::BadArgument, "wk_table_six: bad sizes list");
        }
        if (parsed.empty()) wk::fail(wk::Errc::BadArgument, "wk_table_six: empty sizes list");
        wk::WeldTableReport rep = wk::table_6crossings(c->entries, parsed, budget);
        *out = dup_string(as_text ? wk::table_report_text(rep) : wk::table_report_json(rep));
    });
}

} // extern "C"
