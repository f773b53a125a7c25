#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "gauss.hpp"
#include "laurent.hpp"
#include "moves.hpp"
#include "presentation.hpp"
#include "warping.hpp"

namespace wk {

enum class VerdictStatus { Unknot, Knotted, Unknown };

enum class UnknotWitnessKind {
    WarpingZero,         // some basepoint has warping degree 0 as given
    SimplifiedEmpty,     // the move search reached the empty code
    ResidualWarpingZero  // the search got stuck but the residue has degree 0
};

enum class KnottedCertificateKind { Dihedral, AlexanderNontrivial };

// Combined triviality decision. Certificates are one-sided: Unknot evidence
// is a warping basepoint or a replayable trace, Knotted evidence is a
// coloring modulus or a nontrivial Alexander polynomial. When both sides
// fire at once something is broken and we throw InternalInconsistency.
struct TrivialityVerdict {
    VerdictStatus status = VerdictStatus::Unknown;

    std::optional<UnknotWitnessKind> witness;
    int basepoint = -1;                         // warping witnesses
    Orientation orientation = Orientation::Forward;
    std::vector<MoveInstance> trace;            // simplify witnesses
    Code residual;                              // ResidualWarpingZero
    std::uint64_t states_explored = 0;

    std::optional<KnottedCertificateKind> certificate;
    long dihedral_m = 0;
    Laurent alexander_poly;
};

// Budget split: 70 percent to simplify states, 30 percent to the Tietze
// preprocessing of the Alexander certificate; dihedral moduli up to 21.
TrivialityVerdict triviality_verdict(const Code& code, std::uint64_t budget = 1000000);

struct UnknottingBounds {
    int lower = 0;
    int upper = 0;
    std::uint64_t unresolved = 0;  // Unknown verdicts seen along the way
};

// Welds subsets by increasing size; upper = smallest size reaching a
// certified unknot, lower = smallest size whose layer is not all-Knotted.
// budget is the per-subset verdict budget.
UnknottingBounds welded_unknotting_bounds(const Code& code, std::uint64_t budget = 100000);

// Coloring counts for m = 3, 5, 7 plus the Alexander coefficient vector
// normalized up to reversal; rank_one is false (and alexander empty) in the
// defensive case where the abelianization has free rank != 1.
struct Fingerprint {
    std::array<Int, 3> colorings{};
    std::vector<Int> alexander;
    bool rank_one = true;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Code& code);

enum class TableVerdict { Z, NonZ, Unknown };
enum class TableFlag {
    ExtraNonZ,   // certified non-Z where the reference table lists nothing
    Unresolved,  // no certificate either way
    Conflict     // certified result contradicts every reference listing
};

struct TableRow {
    std::vector<int> subset;
    TableVerdict verdict = TableVerdict::Unknown;
    Presentation presentation;  // Tietze-simplified
    Fingerprint fp;
    std::optional<long> dihedral_m;
    bool empty_reducible = false;  // only probed for Z rows of size <= 2
    std::optional<TableFlag> flag;
};

struct TableSection {
    int size = 0;
    std::vector<TableRow> rows;
    int z_count = 0;
    int nonz_count = 0;
    int unknown_count = 0;
    std::vector<std::vector<int>> empty_reducible;
};

struct KnotTable {
    std::string name;
    std::vector<TableSection> sections;
};

struct WeldTableReport {
    std::vector<KnotTable> knots;
};

// Classifies every weld subset of the requested sizes for the six-crossing
// catalog entries and compares against the reference tables baked into this
// module. budget splits 60 percent to Tietze work and 20 percent to the
// empty-reducibility probe per subset. CatalogMissing if 6_1, 6_2 or 6_3 is
// absent.
WeldTableReport table_6crossings(const std::vector<CatalogEntry>& catalog,
                                 const std::vector<int>& sizes = {1, 2, 3},
                                 std::uint64_t budget = 100000);

std::string table_report_text(const WeldTableReport& report);
std::string table_report_json(const WeldTableReport& report);

// Stable display names used by the serializers above and by client code.
std::string verdict_status_name(VerdictStatus s);
std::string unknot_witness_name(UnknotWitnessKind k);
std::string knotted_certificate_name(KnottedCertificateKind k);
std::string table_verdict_name(TableVerdict v);
std::string table_flag_name(TableFlag f);

} // namespace wk
