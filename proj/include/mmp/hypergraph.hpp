#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmp {

enum class Errc {
    parse = 1,
    invalid,
    budget,
    range,
    infeasible,
    io,
    argument,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Search budgets count visited nodes; kUnlimited disables the cap.
inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct NodeBudget {
    std::uint64_t limit = kUnlimited;
    std::uint64_t used = 0;

    void tick(const char* what) {
        if (++used > limit) throw Error(Errc::budget, std::string(what) + ": node budget exhausted");
    }
};

// Vertices are indexed 0..k-1 in first-occurrence order; each carries its
// label token. Hyperedges keep the written vertex order.
struct Hypergraph {
    int n = 3;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> edges;

    int k() const { return static_cast<int>(labels.size()); }
    int l() const { return static_cast<int>(edges.size()); }
};

extern const std::string_view kAlphabet;

std::string encode_label(std::size_t index);
std::size_t decode_label(std::string_view token);

int max_edge_size(const Hypergraph& h);

// Reorders vertices to first occurrence in the edge list, dropping unused ones.
Hypergraph normalized(const Hypergraph& h);

// Builds a hypergraph over vertex ids 0..k-1 and relabels it 1,2,3,... in
// first-occurrence order.
Hypergraph make_hypergraph(int k, const std::vector<std::vector<int>>& edges, int n = 0);

}  // namespace mmp
