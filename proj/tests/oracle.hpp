#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mmp/core.hpp"
#include "mmp/hypergraph.hpp"

namespace oracle {

using mmp::Hypergraph;

// Vertex subsets as bitmasks over k <= 20 vertices.
inline std::vector<std::uint32_t> edge_masks(const Hypergraph& h) {
    std::vector<std::uint32_t> out;
    for (const auto& e : h.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= 1u << v;
        out.push_back(m);
    }
    return out;
}

inline bool independent(const std::vector<std::uint32_t>& edges, std::uint32_t s) {
    for (auto e : edges)
        if (__builtin_popcount(e & s) > 1) return false;
    return true;
}

inline bool binary(const Hypergraph& h) {
    auto edges = edge_masks(h);
    for (std::uint32_t s = 0; s < (1u << h.k()); ++s) {
        bool ok = true;
        for (auto e : edges)
            if (__builtin_popcount(e & s) != 1) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

struct Indices {
    int HI_cM = 0, HI_cm = 1 << 30, l_cM = 0, l_cm = 1 << 30;
};

inline Indices indices(const Hypergraph& h) {
    auto edges = edge_masks(h);
    auto m = mmp::multiplicities(h);
    const int k = h.k();
    std::vector<char> indep(1u << k);
    for (std::uint32_t s = 0; s < (1u << k); ++s) indep[s] = independent(edges, s);
    Indices r;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        if (!indep[s]) continue;
        int size = __builtin_popcount(s), w = 0;
        for (int v = 0; v < k; ++v)
            if (s >> v & 1) w += m[v];
        r.HI_cM = std::max(r.HI_cM, size);
        r.l_cM = std::max(r.l_cM, w);
        bool maximal = true;
        for (int v = 0; v < k && maximal; ++v)
            if (!(s >> v & 1) && indep[s | 1u << v]) maximal = false;
        if (maximal) {
            r.HI_cm = std::min(r.HI_cm, size);
            r.l_cm = std::min(r.l_cm, w);
        }
    }
    return r;
}

inline bool critical(const Hypergraph& h) {
    if (binary(h)) return false;
    for (int j = 0; j < h.l(); ++j) {
        Hypergraph g = h;
        g.edges.erase(g.edges.begin() + j);
        if (!binary(g)) return false;
    }
    return true;
}

// Random hypergraph on k vertices: edges of size 2..n, pairwise sharing at
// most n-2 vertices, every vertex covered.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int k, int n) {
    std::uniform_int_distribution<int> size(2, n), vert(0, k - 1);
    std::vector<std::vector<int>> edges;
    auto fits = [&](const std::vector<int>& e) {
        for (const auto& f : edges) {
            int common = 0;
            for (int v : e) common += std::count(f.begin(), f.end(), v);
            if (common > n - 2) return false;
        }
        return true;
    };
    std::vector<char> covered(k, 0);
    int target = k / 2 + std::uniform_int_distribution<int>(1, k)(rng);
    for (int tries = 0; tries < 400 && (static_cast<int>(edges.size()) < target ||
                                        std::count(covered.begin(), covered.end(), 0) > 0);
         ++tries) {
        std::vector<int> e;
        int s = std::min(size(rng), k);
        // bias towards uncovered vertices so every vertex ends up used
        for (int v = 0; v < k && static_cast<int>(e.size()) < 1; ++v)
            if (!covered[v] && rng() % 2) e.push_back(v);
        while (static_cast<int>(e.size()) < s) {
            int v = vert(rng);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        if (!fits(e)) continue;
        for (int v : e) covered[v] = 1;
        edges.push_back(e);
    }
    return mmp::make_hypergraph(k, edges, n);
}

}  // namespace oracle
