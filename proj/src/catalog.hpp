#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gauss.hpp"

namespace wk {

struct CatalogEntry {
    std::string name;
    Diagram diagram;
    std::optional<int> unknotting_number;
    std::array<long, 3> colorings{};      // counts for m = 3, 5, 7
    std::vector<long> alexander_coeffs;   // lowest degree first
};

// Loads a JSON catalog and verifies every entry's stored fingerprint
// against recomputation. Errors: IoError, SchemaError,
// FingerprintMismatch(name).
std::vector<CatalogEntry> catalog_load(const std::string& path);

} // namespace wk
