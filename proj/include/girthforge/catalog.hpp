#ifndef GIRTHFORGE_CATALOG_HPP
#define GIRTHFORGE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "girthforge/circular.hpp"
#include "girthforge/expect.hpp"
#include "girthforge/graph.hpp"

namespace girthforge {

// One row of the construction catalog (t, girth target, recipe, q constraint).
struct CatalogRow {
    std::string id;             // e.g. "t3-g4"
    std::string t_display;      // "3", "9 or >= 11", ...
    int girth = 0;
    std::string construction;
    std::string q_constraint;   // "any prime power" | "power of 2" | "power of 3"
    std::string size_formula;
    std::string clique_formula;
    int smallest_q = 2;
    bool parametric_t = false;
    // Whether (t, girth) selects this row; for parametric rows t ranges.
    bool matches(int t, int girth) const;
};

const std::vector<CatalogRow>& catalog_rows();

struct CatalogBuild {
    std::string row_id;
    int q = 0;
    int t = 0;
    Graph graph;
    Expectations expect;
};

// Builds a row by id at order q (t_param selects t for parametric rows).
// Throws NoSuchEntry / WrongFieldCharacteristic / SelfDualityRequired.
CatalogBuild build_catalog_row(const std::string& id, int q,
                               std::optional<int> t_param = std::nullopt, int threads = 1);

// First row in table order matching (t, target_girth).
CatalogBuild catalog_entry(int t, int target_girth, int q, int threads = 1);

// Cached self-duality lookup for the named geometry (search runs once per process).
std::optional<std::vector<int32_t>> cached_self_duality(const std::string& kind, int q);
Conduit make_conduit_with_sigma(const std::string& kind, int q);

// ---- CircularSpec JSON files (External Interfaces) ----
// {"topology": "cycle", "hops": [{"conduit": {"kind": "sq", "q": 2}, "coord": 0,
//  "orientation": "forward"}], "unfold": {"copies": 3},
//  "expected": {"t": 6, "girth_floor": 6, "clique": {"parts": [0,2,4],
//  "size_formula": "3*n^2"}}}
// Non-circular recipes carry "type": "matching-contraction" | "conduit-cycle" |
// "geometry" | "debruijn-circular" | "hamming-circular".
CatalogBuild build_from_spec_json(const std::string& json_text, int threads = 1);
std::string catalog_row_spec_json(const std::string& id, int q);

}  // namespace girthforge

#endif
