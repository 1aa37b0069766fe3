#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mmp/assign.hpp"
#include "mmp/coord.hpp"
#include "mmp/hypergraph.hpp"
#include "mmp/ineq.hpp"
#include "mmp/lang.hpp"

namespace mmp {

struct AnalyzeOptions {
    bool exact = true;  // fall back to the heuristic when the budget runs out
    int runs = 50000;
    std::uint64_t seed = 1;
    std::uint64_t node_limit = kUnlimited;
    bool critical = true;
    std::string name;
};

struct Analysis {
    std::string name;
    std::string id;  // hex digest of the canonical form
    Hypergraph h;
    std::optional<bool> binary;
    std::optional<bool> critical;
    bool parity = false;
    IndexReport idx;
    std::optional<InequalityReport> ineq;
    bool indeterminate = false;  // some budget ran out
};

Analysis analyze(const Hypergraph& h, const AnalyzeOptions& opts = {});
std::string to_json(const Analysis& a, int indent = -1);
std::string to_text(const Analysis& a);

std::string hypergraph_json(const Hypergraph& h, int indent = -1);
std::string validation_json(const ValidationReport& r, int indent = -1);

// Label -> [[re, im], ...]. Reading also accepts scalar tokens ("-r2", "i").
std::string coords_json(const Hypergraph& h, const Coordinatization& c, int indent = -1);
Coordinatization parse_coords_json(const Hypergraph& h, std::string_view text);

}  // namespace mmp
