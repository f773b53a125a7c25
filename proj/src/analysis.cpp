#include "analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace wk {

namespace {

using nlohmann::json;

// Visits all k-element subsets of items in lexicographic index order.
void for_each_combination(const std::vector<int>& items, int k,
                          const std::function<void(const std::vector<int>&)>& f) {
    const int n = static_cast<int>(items.size());
    if (k == 0) {
        std::vector<int> empty;
        f(empty);
        return;
    }
    if (k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> cur(static_cast<size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = items[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        f(cur);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Int> reversal_min(std::vector<Int> c) {
    std::vector<Int> r(c.rbegin(), c.rend());
    return std::lexicographical_compare(r.begin(), r.end(), c.begin(), c.end()) ? r : c;
}

std::optional<std::vector<Int>> alexander_opt(const Presentation& p) {
    try {
        return alexander_from_presentation(p).coeff_vector();
    } catch (const Error& e) {
        if (e.code() != Errc::NotRankOne) throw;
        return std::nullopt;
    }
}

// ---- reference classification for the six-crossing weld tables ----
//
// Hand-computed published rows this tool reproduces. A subset can be listed
// twice with different answers (the source tables contain such rows); both
// readings are kept and a computed result matching either is accepted.

struct RefFp {
    std::array<long, 3> cols;
    std::vector<long> alex;
};

const RefFp FP_TREF{{9, 5, 7}, {1, -1, 1}};
const RefFp FP_A2B2{{9, 5, 7}, {1}};
const RefFp FP_45{{3, 25, 7}, {1, -3, 1}};
const RefFp FP_246{{9, 5, 7}, {-2, 1}};

struct RefOption {
    bool z = true;
    RefFp fp;
};

using RefMap = std::map<std::vector<int>, std::vector<RefOption>>;

RefOption zrow() { return {true, {}}; }
RefOption nz(const RefFp& fp) { return {false, fp}; }

void addz(RefMap& m, std::initializer_list<std::initializer_list<int>> subsets) {
    for (const auto& s : subsets) m[std::vector<int>(s)] = {zrow()};
}

std::map<int, RefMap> reference_for(const std::string& name) {
    std::map<int, RefMap> by_size;
    RefMap& s1 = by_size[1];
    for (int i = 1; i <= 6; ++i) s1[{i}] = {zrow()};
    RefMap& s2 = by_size[2];
    RefMap& s3 = by_size[3];
    if (name == "6_1") {
        addz(s2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {4, 6}});
        s2[{3, 4}] = {nz(FP_45)};
        s2[{4, 5}] = {nz(FP_45)};
        s2[{5, 6}] = {zrow(), nz(FP_45)};  // listed both ways
        s2[{3, 6}] = {nz(FP_246)};
        std::vector<int> all{1, 2, 3, 4, 5, 6};
        for_each_combination(all, 3, [&](const std::vector<int>& t) { s3[t] = {zrow()}; });
    } else if (name == "6_2") {
        addz(s2, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 6}});
        s2[{2, 4}] = {nz(FP_A2B2)};
        s2[{4, 5}] = {nz(FP_45)};
        s2[{5, 6}] = {nz(FP_45), nz(FP_TREF)};  // listed both ways
        addz(s3, {{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6},
                  {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}, {4, 5, 6}});
        s3[{1, 2, 3}] = {nz(FP_TREF)};
        s3[{1, 2, 5}] = {nz(FP_TREF)};
        s3[{1, 2, 6}] = {nz(FP_TREF)};
        s3[{2, 3, 4}] = {nz(FP_A2B2)};
        s3[{2, 4, 6}] = {nz(FP_246)};
    } else if (name == "6_3") {
        addz(s2, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
        s2[{1, 2}] = {nz(FP_TREF)};
        s2[{2, 4}] = {nz(FP_A2B2)};
        s2[{5, 6}] = {nz(FP_TREF)};
        addz(s3, {{1, 2, 6}, {2, 3, 5}, {2, 3, 6}, {3, 4, 6}});
        s3[{1, 2, 3}] = {nz(FP_TREF)};
        s3[{1, 2, 4}] = {nz(FP_TREF)};
        s3[{1, 2, 5}] = {nz(FP_TREF)};
        s3[{4, 5, 6}] = {nz(FP_TREF)};
        s3[{2, 3, 4}] = {nz(FP_A2B2)};
        s3[{3, 4, 5}] = {nz(FP_A2B2)};
    }
    return by_size;
}

bool fp_matches(const Fingerprint& got, const RefFp& ref) {
    if (!got.rank_one) return false;
    for (size_t i = 0; i < 3; ++i)
        if (got.colorings[i] != ref.cols[i]) return false;
    std::vector<Int> want(ref.alex.begin(), ref.alex.end());
    return got.alexander == reversal_min(std::move(want));
}

std::optional<TableFlag> compare_reference(const RefMap& ref, const TableRow& row) {
    if (row.verdict == TableVerdict::Unknown) return TableFlag::Unresolved;
    auto it = ref.find(row.subset);
    if (it == ref.end())
        return row.verdict == TableVerdict::NonZ ? std::optional(TableFlag::ExtraNonZ) : std::nullopt;
    for (const RefOption& opt : it->second) {
        if (opt.z && row.verdict == TableVerdict::Z) return std::nullopt;
        if (!opt.z && row.verdict == TableVerdict::NonZ && fp_matches(row.fp, opt.fp))
            return std::nullopt;
    }
    return TableFlag::Conflict;
}

TableRow classify_row(const Code& base, const std::vector<int>& subset,
                      std::uint64_t tietze_budget, std::uint64_t probe_budget) {
    TableRow row;
    row.subset = subset;
    Code d = weld_set(make_diagram(base), subset).code;
    Presentation w = wirtinger(d);
    Presentation p = tietze_simplify(w, tietze_budget);
    row.presentation = p;
    for (size_t i = 0; i < 3; ++i)
        row.fp.colorings[i] = coloring_count(d, 3 + 2 * static_cast<long>(i)).total;
    auto alex = alexander_opt(p.ngens <= 5 ? p : w);
    if (alex)
        row.fp.alexander = reversal_min(std::move(*alex));
    else
        row.fp.rank_one = false;
    if (p.ngens == 1 && p.relators.empty()) {
        row.verdict = TableVerdict::Z;
        if (subset.size() <= 2)
            row.empty_reducible = simplify(make_diagram(d), probe_budget).result.code.empty();
    } else {
        row.dihedral_m = dihedral_nontriviality(d, 21);
        bool alex_nontrivial = !row.fp.rank_one || row.fp.alexander != std::vector<Int>{1};
        row.verdict = (row.dihedral_m.has_value() || alex_nontrivial) ? TableVerdict::NonZ
                                                                      : TableVerdict::Unknown;
    }
    return row;
}

std::string coeffs_str(const std::vector<Int>& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].get_str();
    }
    return out;
}

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

std::string verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Unknot: return "Unknot";
        case VerdictStatus::Knotted: return "Knotted";
        case VerdictStatus::Unknown: return "Unknown";
    }
    return "?";
}

std::string unknot_witness_name(UnknotWitnessKind k) {
    switch (k) {
        case UnknotWitnessKind::WarpingZero: return "warping0";
        case UnknotWitnessKind::SimplifiedEmpty: return "empty";
        case UnknotWitnessKind::ResidualWarpingZero: return "residual-warping0";
    }
    return "?";
}

std::string knotted_certificate_name(KnottedCertificateKind k) {
    switch (k) {
        case KnottedCertificateKind::Dihedral: return "dihedral";
        case KnottedCertificateKind::AlexanderNontrivial: return "alexander";
    }
    return "?";
}

std::string table_verdict_name(TableVerdict v) {
    switch (v) {
        case TableVerdict::Z: return "Z";
        case TableVerdict::NonZ: return "nonZ";
        case TableVerdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string table_flag_name(TableFlag f) {
    switch (f) {
        case TableFlag::ExtraNonZ: return "extra_nonZ";
        case TableFlag::Unresolved: return "unresolved";
        case TableFlag::Conflict: return "conflict";
    }
    return "?";
}

TrivialityVerdict triviality_verdict(const Code& code, std::uint64_t budget) {
    if (budget < 1) fail(Errc::BadParameter, "verdict budget must be at least 1");
    TrivialityVerdict v;

    WarpingPair wp = warping_pair(code);
    bool unknot = false;
    if (wp.forward == 0 || wp.reverse == 0) {
        unknot = true;
        v.witness = UnknotWitnessKind::WarpingZero;
        if (wp.forward == 0) {
            v.orientation = Orientation::Forward;
            v.basepoint = is_descending(code).value();
        } else {
            v.orientation = Orientation::Reverse;
            v.basepoint = is_descending(reverse_code(code)).value();
        }
    } else {
        SimplifyReport rep = simplify(make_diagram(code), std::max<std::uint64_t>(1, budget * 7 / 10));
        v.states_explored = rep.states_explored;
        if (rep.result.code.empty()) {
            unknot = true;
            v.witness = UnknotWitnessKind::SimplifiedEmpty;
            v.trace = rep.trace;
        } else {
            WarpingPair rwp = warping_pair(rep.result.code);
            if (rwp.forward == 0 || rwp.reverse == 0) {
                unknot = true;
                v.witness = UnknotWitnessKind::ResidualWarpingZero;
                v.trace = rep.trace;
                v.residual = rep.result.code;
                if (rwp.forward == 0) {
                    v.orientation = Orientation::Forward;
                    v.basepoint = is_descending(rep.result.code).value();
                } else {
                    v.orientation = Orientation::Reverse;
                    v.basepoint = is_descending(reverse_code(rep.result.code)).value();
                }
            }
        }
    }

    bool knotted = false;
    std::optional<long> m = dihedral_nontriviality(code, 21);
    if (m) {
        knotted = true;
        v.certificate = KnottedCertificateKind::Dihedral;
        v.dihedral_m = *m;
    } else {
        Presentation p = tietze_simplify(wirtinger(code), std::max<std::uint64_t>(1, budget * 3 / 10));
        try {
            Laurent a = alexander_from_presentation(p);
            if (!a.is_one()) {
                knotted = true;
                v.certificate = KnottedCertificateKind::AlexanderNontrivial;
                v.alexander_poly = a;
            }
        } catch (const Error& e) {
            if (e.code() != Errc::NotRankOne) throw;
        }
    }

    if (unknot && knotted)
        fail(Errc::InternalInconsistency,
             "both unknot and knotted evidence for " + serialize(code));
    if (unknot) {
        v.status = VerdictStatus::Unknot;
        v.certificate.reset();
    } else if (knotted) {
        v.status = VerdictStatus::Knotted;
        v.witness.reset();
    } else {
        v.status = VerdictStatus::Unknown;
        v.witness.reset();
        v.certificate.reset();
    }
    return v;
}

UnknottingBounds welded_unknotting_bounds(const Code& code, std::uint64_t budget) {
    std::vector<int> labs = crossing_labels(code);
    const int nmax = static_cast<int>(labs.size());
    std::optional<int> lower, upper;
    std::uint64_t unresolved = 0;
    for (int size = 0; size <= nmax; ++size) {
        bool layer_nonknotted = false;
        for_each_combination(labs, size, [&](const std::vector<int>& S) {
            Code d = weld_set(make_diagram(code), S).code;
            TrivialityVerdict v = triviality_verdict(d, budget);
            if (v.status == VerdictStatus::Unknown) ++unresolved;
            if (v.status != VerdictStatus::Knotted) layer_nonknotted = true;
            if (v.status == VerdictStatus::Unknot && !upper) upper = size;
        });
        if (layer_nonknotted && !lower) lower = size;
        if (upper) break;
    }
    return {lower.value(), upper.value(), unresolved};
}

Fingerprint fingerprint(const Code& code) {
    Fingerprint fp;
    for (size_t i = 0; i < 3; ++i)
        fp.colorings[i] = coloring_count(code, 3 + 2 * static_cast<long>(i)).total;
    Presentation w = wirtinger(code);
    Presentation p = tietze_simplify(w, 30000);
    auto alex = alexander_opt(p.ngens <= 6 ? p : w);
    if (alex)
        fp.alexander = reversal_min(std::move(*alex));
    else
        fp.rank_one = false;
    return fp;
}

WeldTableReport table_6crossings(const std::vector<CatalogEntry>& catalog,
                                 const std::vector<int>& sizes, std::uint64_t budget) {
    const std::uint64_t tietze_budget = std::max<std::uint64_t>(1, budget * 6 / 10);
    const std::uint64_t probe_budget = std::max<std::uint64_t>(1, budget * 2 / 10);
    WeldTableReport report;
    for (const char* name : {"6_1", "6_2", "6_3"}) {
        auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
        if (it == catalog.end())
            fail(Errc::CatalogMissing, std::string("catalog has no entry ") + name);
        const Code& base = it->diagram.code;
        std::vector<int> labs = crossing_labels(base);
        std::map<int, RefMap> ref = reference_for(name);
        KnotTable table;
        table.name = name;
        for (int size : sizes) {
            if (size < 1 || size > 3)
                fail(Errc::BadArgument, "table sizes must be between 1 and 3");
            TableSection sec;
            sec.size = size;
            for_each_combination(labs, size, [&](const std::vector<int>& S) {
                TableRow row = classify_row(base, S, tietze_budget, probe_budget);
                row.flag = compare_reference(ref[size], row);
                switch (row.verdict) {
                    case TableVerdict::Z: ++sec.z_count; break;
                    case TableVerdict::NonZ: ++sec.nonz_count; break;
                    case TableVerdict::Unknown: ++sec.unknown_count; break;
                }
                if (row.empty_reducible) sec.empty_reducible.push_back(S);
                sec.rows.push_back(std::move(row));
            });
            table.sections.push_back(std::move(sec));
        }
        report.knots.push_back(std::move(table));
    }
    return report;
}

std::string table_report_text(const WeldTableReport& report) {
    std::ostringstream out;
    for (const KnotTable& knot : report.knots) {
        out << "== " << knot.name << " ==\n";
        for (const TableSection& sec : knot.sections) {
            out << " welds of size " << sec.size << ": Z " << sec.z_count
                << ", nonZ " << sec.nonz_count << ", unknown " << sec.unknown_count << "\n";
            for (const TableRow& row : sec.rows) {
                std::string sub = subset_str(row.subset);
                out << "   " << sub << std::string(sub.size() < 10 ? 10 - sub.size() : 1, ' ')
                    << table_verdict_name(row.verdict);
                out << "  colorings " << row.fp.colorings[0].get_str() << "/"
                    << row.fp.colorings[1].get_str() << "/" << row.fp.colorings[2].get_str();
                out << "  alexander "
                    << (row.fp.rank_one ? coeffs_str(row.fp.alexander) : std::string("rank!=1"));
                if (row.dihedral_m) out << "  dihedral " << *row.dihedral_m;
                if (row.empty_reducible) out << "  empty";
                if (row.flag) out << "  [" << table_flag_name(*row.flag) << "]";
                out << "  " << presentation_str(row.presentation) << "\n";
            }
            if (!sec.empty_reducible.empty()) {
                out << "   reduce to the empty code:";
                for (const auto& s : sec.empty_reducible) out << " " << subset_str(s);
                out << "\n";
            }
        }
    }
    return out.str();
}

std::string table_report_json(const WeldTableReport& report) {
    json knots = json::array();
    for (const KnotTable& knot : report.knots) {
        json sections = json::array();
        for (const TableSection& sec : knot.sections) {
            json rows = json::array();
            for (const TableRow& row : sec.rows) {
                json r;
                r["subset"] = row.subset;
                r["verdict"] = table_verdict_name(row.verdict);
                r["presentation"] = presentation_str(row.presentation);
                json cols = json::array();
                for (const Int& c : row.fp.colorings) cols.push_back(c.get_str());
                json alex = json::array();
                for (const Int& c : row.fp.alexander) alex.push_back(c.get_str());
                r["fingerprint"] = {{"colorings", cols},
                                    {"alexander", alex},
                                    {"rank_one", row.fp.rank_one}};
                r["dihedral_m"] = row.dihedral_m ? json(*row.dihedral_m) : json(nullptr);
                r["empty_reducible"] = row.empty_reducible;
                r["flag"] = row.flag ? json(table_flag_name(*row.flag)) : json(nullptr);
                rows.push_back(std::move(r));
            }
            sections.push_back({{"size", sec.size},
                                {"z", sec.z_count},
                                {"non_z", sec.nonz_count},
                                {"unknown", sec.unknown_count},
                                {"empty_reducible", sec.empty_reducible},
                                {"rows", rows}});
        }
        knots.push_back({{"name", knot.name}, {"sections", sections}});
    }
    return json{{"knots", knots}}.dump(2);
}

} // namespace wk
