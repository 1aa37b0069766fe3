#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmp/hypergraph.hpp"

namespace mmp {

std::vector<int> multiplicities(const Hypergraph& h);

// Drops every vertex of multiplicity 1, then hyperedges left with fewer than
// two vertices and any vertex no longer covered. With fixpoint set the step
// repeats until no multiplicity-1 vertex remains.
Hypergraph strip_unishared(const Hypergraph& h, bool fixpoint = false);

// Vertices whose multiplicity falls to 0 are dropped; others keep their order.
Hypergraph remove_hyperedge(const Hypergraph& h, int index);

struct Graph {
    int order = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

Graph to_graph(const Hypergraph& h);

// Hyperedges are the maximal cliques of g in lexicographic order of their
// sorted vertex indices.
Hypergraph from_graph(const Graph& g, int n);

struct CanonicalForm {
    std::string bytes;           // canonical MMP string prefixed by n
    Hypergraph graph;            // canonically relabeled hypergraph
    std::vector<int> relabel;    // original vertex -> canonical vertex
    std::uint64_t nodes = 0;     // search-tree nodes visited
};

CanonicalForm canonical_form(const Hypergraph& h, std::uint64_t node_limit = kUnlimited);
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, std::uint64_t node_limit = kUnlimited);

}  // namespace mmp
