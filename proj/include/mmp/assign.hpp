#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmp/hypergraph.hpp"

namespace mmp {

// An assignment is the sorted list of vertices carrying 1.
using Assignment = std::vector<int>;

bool is_admissible(const Hypergraph& h, const Assignment& ones);
bool is_exact(const Hypergraph& h, const Assignment& ones);
bool is_maximal(const Hypergraph& h, const Assignment& ones);

struct BinaryResult {
    bool binary = false;
    std::optional<Assignment> witness;
    std::uint64_t nodes = 0;
};

BinaryResult is_binary(const Hypergraph& h, std::uint64_t node_limit = kUnlimited);

// Binarity of the sub-hypergraph formed by the hyperedges with active[j] set.
BinaryResult is_binary_subset(const Hypergraph& h, const std::vector<char>& active,
                              std::uint64_t node_limit = kUnlimited);

struct IndexReport {
    int HI_cM = 0;
    int HI_cm = 0;
    int HI_mcM = 0;
    int l_cM = 0;
    int l_cm = 0;
    bool exact = false;
    Assignment w_HI_cM, w_HI_cm, w_HI_mcM, w_l_cM, w_l_cm;
    int runs_used = 0;
};

IndexReport classical_indices_exact(const Hypergraph& h, std::uint64_t node_limit = kUnlimited);
IndexReport classical_indices_heuristic(const Hypergraph& h, int runs = 50000, std::uint64_t seed = 1);

bool is_critical(const Hypergraph& h, std::uint64_t node_limit = kUnlimited);
bool has_parity_proof(const Hypergraph& h);

struct CriticalSearch {
    std::uint64_t seed = 1;
    int descents = 100;           // random descents to perform
    double seconds = 0;           // wall-clock cap, 0 = none
    int max_results = 0;          // stop after this many distinct criticals, 0 = no cap
    std::uint64_t node_limit = kUnlimited;  // per binarity test
};

std::vector<Hypergraph> find_criticals(const Hypergraph& h, const CriticalSearch& opts);

// Stateless per-run generator seed used by the randomized routines.
std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run);

}  // namespace mmp
