// weldkit command line tool. Talks to the core exclusively through the
// shared-library C API so the CLI doubles as a consumer test of that surface.
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weldkit/weldkit.h"

using nlohmann::json;

namespace {

// Mapped to exit 1 with a one-line message naming the failing operation.
struct CliError {
    std::string op;
    std::string msg;
};

[[noreturn]] void die(const std::string& op, const std::string& msg) {
    throw CliError{op, msg};
}

void check(wk_status st, const std::string& op) {
    if (st != WK_OK) die(op, wk_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    wk_string_free(s);
    return out;
}

struct Diagram {
    wk_diagram* d = nullptr;
    Diagram() = default;
    Diagram(const Diagram&) = delete;
    Diagram& operator=(const Diagram&) = delete;
    Diagram(Diagram&& other) noexcept : d(other.d) { other.d = nullptr; }
    ~Diagram() { wk_diagram_free(d); }
};

// Diagram arguments are inline codes, file paths, or "-" for stdin.
std::string read_diagram_text(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) die("parse", "cannot open " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Diagram parse_arg(const std::string& arg, const std::string& op) {
    Diagram out;
    check(wk_diagram_parse(read_diagram_text(arg).c_str(), &out.d), op);
    return out;
}

std::string serialize_of(const Diagram& d, const std::string& op) {
    char* s = nullptr;
    check(wk_diagram_serialize(d.d, &s), op);
    return take(s);
}

struct Options {
    bool as_json = false;
    bool strict = false;
    std::string diagram;
    std::string catalog_path = "data/rolfsen.json";
    std::string sizes = "1,2,3";
    std::string name;
    std::uint64_t budget = 0;  // 0: unset, fall back to env then default
    int n = 0;
    int m1 = 0;
    long m = 0;
    bool weld_one = false;
    bool weld_two = false;
    std::vector<int> labels;
};

std::uint64_t resolve_budget(const Options& o) {
    if (o.budget > 0) return o.budget;
    if (const char* env = std::getenv("WELDKIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            die("budget", "WELDKIT_BUDGET must be a positive integer");
        return v;
    }
    return 1000000ull;
}

void emit_diagram(const Diagram& d, const Options& o, const std::string& op) {
    if (o.as_json) {
        char* s = nullptr;
        check(wk_diagram_json(d.d, &s), op);
        std::cout << take(s) << "\n";
    } else {
        std::cout << serialize_of(d, op) << "\n";
    }
}

std::string move_text(const json& mv) {
    std::string out = mv["kind"].get<std::string>() + " @";
    for (const json& p : mv["location"]) out += " " + std::to_string(p.get<int>());
    std::string kind = mv["kind"].get<std::string>();
    if (kind == "R1_insert" || kind == "R2_insert")
        out += " sign " + std::to_string(mv["sign"].get<int>());
    if (mv["over_first"].get<bool>()) out += " over-first";
    return out;
}

int family_welds(const Options& o) {
    if (o.weld_one && o.weld_two) die("family", "choose one of --weld-one and --weld-two");
    return o.weld_one ? 1 : o.weld_two ? 2 : 0;
}

std::string witness_text(const json& w) {
    std::string kind = w["kind"].get<std::string>();
    if (kind == "warping0")
        return "WarpingZero(basepoint=" + std::to_string(w["basepoint"].get<int>()) + ", " +
               w["orientation"].get<std::string>() + ")";
    if (kind == "empty")
        return "SimplifiedEmpty(moves=" + std::to_string(w["trace"].size()) +
               ", states=" + std::to_string(w["states"].get<std::uint64_t>()) + ")";
    return "ResidualWarpingZero(moves=" + std::to_string(w["trace"].size()) +
           ", basepoint=" + std::to_string(w["basepoint"].get<int>()) + ", " +
           w["orientation"].get<std::string>() + ")";
}

std::string certificate_text(const json& c) {
    if (c["kind"] == "dihedral")
        return "Dihedral(" + std::to_string(c["m"].get<long>()) + ")";
    return "AlexanderNontrivial(" + c["display"].get<std::string>() + ")";
}

int run_verdict(const Options& o) {
    Diagram d = parse_arg(o.diagram, "verdict");
    char* s = nullptr;
    check(wk_verdict(d.d, resolve_budget(o), &s), "verdict");
    std::string payload = take(s);
    json j = json::parse(payload);
    if (o.as_json) {
        std::cout << payload << "\n";
    } else {
        std::string status = j["status"].get<std::string>();
        if (status == "Unknot")
            std::cout << "Unknot(" << witness_text(j["witness"]) << ")\n";
        else if (status == "Knotted")
            std::cout << "Knotted(" << certificate_text(j["certificate"]) << ")\n";
        else
            std::cout << "Unknown\n";
    }
    return o.strict && j["status"] == "Unknown" ? 2 : 0;
}

void run_simplify(const Options& o) {
    Diagram d = parse_arg(o.diagram, "simplify");
    char* s = nullptr;
    check(wk_simplify(d.d, resolve_budget(o), &s), "simplify");
    std::string payload = take(s);
    if (o.as_json) {
        std::cout << payload << "\n";
        return;
    }
    json j = json::parse(payload);
    std::cout << "result " << j["result"].get<std::string>() << "\n";
    std::cout << "crossings " << j["crossings"].get<int>() << "\n";
    std::cout << "states " << j["states"].get<std::uint64_t>() << "\n";
    std::cout << "budget exhausted " << (j["budget_exhausted"].get<bool>() ? "yes" : "no")
              << "\n";
    for (const json& mv : j["trace"]) std::cout << "  " << move_text(mv) << "\n";
}

void run_catalog_show(const Options& o) {
    wk_catalog* c = nullptr;
    check(wk_catalog_open(o.catalog_path.c_str(), &c), "catalog");
    char* s = nullptr;
    wk_status st = wk_catalog_entry(c, o.name.c_str(), &s);
    if (st != WK_OK) {
        std::string msg = wk_last_error();
        wk_catalog_free(c);
        die("catalog", msg);
    }
    wk_catalog_free(c);
    std::string payload = take(s);
    if (o.as_json) {
        std::cout << payload << "\n";
        return;
    }
    json j = json::parse(payload);
    std::cout << "name " << j["name"].get<std::string>() << "\n";
    std::cout << "code " << j["gauss_code"].get<std::string>() << "\n";
    if (j["unknotting_number"].is_null())
        std::cout << "unknotting number unknown\n";
    else
        std::cout << "unknotting number " << j["unknotting_number"].get<int>() << "\n";
    const json& fp = j["fingerprint"];
    std::cout << "colorings " << fp["colorings"]["3"].get<long>() << "/"
              << fp["colorings"]["5"].get<long>() << "/" << fp["colorings"]["7"].get<long>()
              << "\n";
    std::cout << "alexander";
    for (const json& co : fp["alexander"]) std::cout << " " << co.get<long>();
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    int exit_code = 0;

    CLI::App app{"welded knot diagram toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.as_json, "emit a single JSON document");
    app.add_option("--budget", o.budget, "state budget (default 1000000, env WELDKIT_BUDGET)");
    app.add_option("--catalog", o.catalog_path, "catalog JSON path");

    auto add_diagram = [&](CLI::App* cmd) {
        cmd->add_option("diagram", o.diagram, "inline Gauss code, file path, or - for stdin")
            ->required();
        cmd->fallthrough();
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse and echo a diagram");
    add_diagram(parse_cmd);
    parse_cmd->callback([&] { emit_diagram(parse_arg(o.diagram, "parse"), o, "parse"); });

    CLI::App* canon_cmd = app.add_subcommand("canon", "canonical form of a diagram");
    add_diagram(canon_cmd);
    canon_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "canon");
        Diagram c;
        check(wk_diagram_canonical(d.d, &c.d), "canon");
        emit_diagram(c, o, "canon");
    });

    CLI::App* weld_cmd = app.add_subcommand("weld", "weld crossings by label");
    add_diagram(weld_cmd);
    weld_cmd->add_option("labels", o.labels, "crossing labels to weld")->required();
    weld_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "weld");
        Diagram w;
        check(wk_diagram_weld(d.d, o.labels.data(), o.labels.size(), &w.d), "weld");
        emit_diagram(w, o, "weld");
    });

    CLI::App* simplify_cmd = app.add_subcommand("simplify", "search for a smaller diagram");
    add_diagram(simplify_cmd);
    simplify_cmd->callback([&] { run_simplify(o); });

    CLI::App* desc_cmd = app.add_subcommand("descending", "test for a descending basepoint");
    add_diagram(desc_cmd);
    desc_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "descending");
        char* s = nullptr;
        check(wk_descending(d.d, &s), "descending");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            if (j["descending"].get<bool>())
                std::cout << "descending at basepoint " << j["basepoint"].get<int>() << "\n";
            else
                std::cout << "not descending\n";
        }
    });

    CLI::App* warp_cmd = app.add_subcommand("warping", "minimal warping degrees");
    add_diagram(warp_cmd);
    warp_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "warping");
        char* s = nullptr;
        check(wk_warping(d.d, &s), "warping");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            std::cout << "forward " << j["forward"].get<int>() << "\n";
            std::cout << "reverse " << j["reverse"].get<int>() << "\n";
        }
    });

    CLI::App* verdict_cmd = app.add_subcommand("verdict", "triviality verdict");
    add_diagram(verdict_cmd);
    verdict_cmd->add_flag("--strict", o.strict, "exit 2 when the verdict is Unknown");
    verdict_cmd->callback([&] { exit_code = run_verdict(o); });

    CLI::App* uw_cmd = app.add_subcommand("uw", "welded unknotting number bounds");
    add_diagram(uw_cmd);
    uw_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "uw");
        char* s = nullptr;
        check(wk_uw_bounds(d.d, resolve_budget(o), &s), "uw");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            std::cout << "lower " << j["lower"].get<int>() << "\n";
            std::cout << "upper " << j["upper"].get<int>() << "\n";
            std::cout << "unresolved " << j["unresolved"].get<std::uint64_t>() << "\n";
        }
    });

    CLI::App* group_cmd = app.add_subcommand("group", "knot group computations");
    group_cmd->require_subcommand(1);
    group_cmd->fallthrough();

    CLI::App* wirt_cmd = group_cmd->add_subcommand("wirtinger", "Wirtinger presentation");
    add_diagram(wirt_cmd);
    wirt_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "group wirtinger");
        char* s = nullptr;
        check(wk_group_wirtinger(d.d, &s), "group wirtinger");
        std::string payload = take(s);
        if (o.as_json)
            std::cout << payload << "\n";
        else
            std::cout << json::parse(payload)["display"].get<std::string>() << "\n";
    });

    CLI::App* tietze_cmd = group_cmd->add_subcommand("tietze", "Tietze-simplified presentation");
    add_diagram(tietze_cmd);
    tietze_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "group tietze");
        char* s = nullptr;
        check(wk_group_tietze(d.d, resolve_budget(o), &s), "group tietze");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            std::cout << j["display"].get<std::string>() << "\n";
            std::cout << "infinite cyclic: " << j["certificate"].get<std::string>() << "\n";
        }
    });

    CLI::App* abel_cmd = group_cmd->add_subcommand("abelian", "abelianization invariants");
    add_diagram(abel_cmd);
    abel_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "group abelian");
        char* s = nullptr;
        check(wk_group_abelianization(d.d, &s), "group abelian");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            std::cout << "invariant factors";
            for (const json& f : j["invariant_factors"])
                std::cout << " " << f.get<std::string>();
            std::cout << "\n";
            std::cout << "free rank " << j["free_rank"].get<int>() << "\n";
        }
    });

    CLI::App* alex_cmd = group_cmd->add_subcommand("alexander", "Alexander polynomial");
    add_diagram(alex_cmd);
    alex_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "group alexander");
        char* s = nullptr;
        check(wk_group_alexander(d.d, &s), "group alexander");
        std::string payload = take(s);
        if (o.as_json)
            std::cout << payload << "\n";
        else
            std::cout << json::parse(payload)["display"].get<std::string>() << "\n";
    });

    CLI::App* col_cmd = group_cmd->add_subcommand("colorings", "Fox coloring count");
    add_diagram(col_cmd);
    col_cmd->add_option("--m", o.m, "modulus")->required();
    col_cmd->callback([&] {
        Diagram d = parse_arg(o.diagram, "group colorings");
        char* s = nullptr;
        check(wk_colorings(d.d, o.m, &s), "group colorings");
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            json j = json::parse(payload);
            std::cout << "total " << j["total"].get<std::string>() << "\n";
            std::cout << "nontrivial " << (j["nontrivial"].get<bool>() ? "true" : "false")
                      << "\n";
        }
    });

    CLI::App* family_cmd = app.add_subcommand("family", "generate family diagrams");
    family_cmd->require_subcommand(1);
    family_cmd->fallthrough();

    CLI::App* torus_cmd = family_cmd->add_subcommand("torus", "torus knot K(2, 2n+1)");
    torus_cmd->add_option("--n", o.n, "family parameter")->required();
    torus_cmd->add_flag("--weld-one", o.weld_one, "weld one crossing");
    torus_cmd->add_flag("--weld-two", o.weld_two, "weld two crossings");
    torus_cmd->add_option("--m1", o.m1, "gap parameter for --weld-two");
    torus_cmd->fallthrough();
    torus_cmd->callback([&] {
        Diagram d;
        check(wk_family_torus(o.n, family_welds(o), o.m1, &d.d), "family torus");
        emit_diagram(d, o, "family torus");
    });

    CLI::App* twist_cmd = family_cmd->add_subcommand("twist", "twist knot T_n");
    twist_cmd->add_option("--n", o.n, "family parameter")->required();
    twist_cmd->add_flag("--weld-one", o.weld_one, "weld one crossing");
    twist_cmd->add_flag("--weld-two", o.weld_two, "weld two crossings");
    twist_cmd->fallthrough();
    twist_cmd->callback([&] {
        Diagram d;
        check(wk_family_twist(o.n, family_welds(o), &d.d), "family twist");
        emit_diagram(d, o, "family twist");
    });

    CLI::App* table_cmd = app.add_subcommand("table", "reference table reproduction");
    table_cmd->require_subcommand(1);
    table_cmd->fallthrough();

    CLI::App* six_cmd = table_cmd->add_subcommand("six", "six-crossing weld classification");
    six_cmd->add_option("--sizes", o.sizes, "comma-separated weld sizes (default 1,2,3)");
    six_cmd->fallthrough();
    six_cmd->callback([&] {
        wk_catalog* c = nullptr;
        check(wk_catalog_open(o.catalog_path.c_str(), &c), "table six");
        char* s = nullptr;
        wk_status st = wk_table_six(c, o.sizes.c_str(), resolve_budget(o),
                                    o.as_json ? 0 : 1, &s);
        if (st != WK_OK) {
            std::string msg = wk_last_error();
            wk_catalog_free(c);
            die("table six", msg);
        }
        wk_catalog_free(c);
        std::cout << take(s) << "\n";
    });

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "bundled diagram catalog");
    catalog_cmd->require_subcommand(1);
    catalog_cmd->fallthrough();

    CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
    list_cmd->fallthrough();
    list_cmd->callback([&] {
        wk_catalog* c = nullptr;
        check(wk_catalog_open(o.catalog_path.c_str(), &c), "catalog");
        char* s = nullptr;
        wk_status st = wk_catalog_names(c, &s);
        if (st != WK_OK) {
            std::string msg = wk_last_error();
            wk_catalog_free(c);
            die("catalog", msg);
        }
        wk_catalog_free(c);
        std::string payload = take(s);
        if (o.as_json) {
            std::cout << payload << "\n";
        } else {
            for (const json& name : json::parse(payload))
                std::cout << name.get<std::string>() << "\n";
        }
    });

    CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "show one catalog entry");
    show_cmd->add_option("name", o.name, "entry name, e.g. 4_1")->required();
    show_cmd->fallthrough();
    show_cmd->callback([&] { run_catalog_show(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CliError& e) {
        std::cerr << "weldkit: " << e.op << ": " << e.msg << "\n";
        return 1;
    }
    return exit_code;
}
