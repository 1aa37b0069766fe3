#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mmp/hypergraph.hpp"

namespace mmp {

// One MMP string: comma-separated hyperedges terminated by '.'. Whitespace is
// ignored. n <= 0 selects max(3, largest hyperedge).
Hypergraph parse_mmp(std::string_view text, int n = 0);

// A file holds one string per line ('#' starts a comment line); a string may
// run over several lines until its terminating '.'.
std::vector<Hypergraph> parse_mmp_file(std::string_view text, int n = 0);

std::string serialize_mmp(const Hypergraph& h);

struct Violation {
    std::string rule;
    int edge = -1;
    int vertex = -1;
    std::string message;
};

struct ValidationReport {
    bool strict = false;
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Hypergraph& h, bool strict);

// k x l 0/1 matrix, rows in vertex order, columns in hyperedge order.
std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h);
std::string export_incidence_csv(const Hypergraph& h);
std::string export_dot(const Hypergraph& h);

// Connected components over shared vertices, each relabeled from 1 and
// sorted by descending l, then descending k.
std::vector<Hypergraph> decompose_components(const Hypergraph& h);

}  // namespace mmp
