#include "mmp/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bits.hpp"
#include "mmp/lang.hpp"

namespace mmp {

std::vector<int> multiplicities(const Hypergraph& h) {
    std::vector<int> m(h.k(), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++m[v];
    return m;
}

namespace {

// Keeps only the listed vertices and hyperedges, preserving relative order.
Hypergraph restrict(const Hypergraph& h, const std::vector<char>& keep_vertex,
                    const std::vector<std::vector<int>>& edges) {
    std::vector<int> map(h.k(), -1);
    Hypergraph out;
    out.n = h.n;
    for (int v = 0; v < h.k(); ++v)
        if (keep_vertex[v]) {
            map[v] = out.k();
            out.labels.push_back(h.labels[v]);
        }
    for (const auto& e : edges) {
        std::vector<int> ne;
        for (int v : e) ne.push_back(map[v]);
        out.edges.push_back(std::move(ne));
    }
    return out;
}

Hypergraph strip_once(const Hypergraph& h, bool& changed) {
    auto m = multiplicities(h);
    changed = false;
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges) {
        std::vector<int> ne;
        for (int v : e)
            if (m[v] != 1) ne.push_back(v);
        if (ne.size() != e.size()) changed = true;
        if (ne.size() >= 2) edges.push_back(std::move(ne));
    }
    std::vector<char> keep(h.k(), 0);
    for (const auto& e : edges)
        for (int v : e) keep[v] = 1;
    for (int v = 0; v < h.k(); ++v)
        if (!keep[v]) changed = true;
    return restrict(h, keep, edges);
}

}  // namespace

Hypergraph strip_unishared(const Hypergraph& h, bool fixpoint) {
    bool changed = false;
    Hypergraph out = strip_once(h, changed);
    while (fixpoint && changed && out.l() > 0) out = strip_once(out, changed);
    if (out.l() == 0) throw Error(Errc::invalid, "stripping multiplicity-1 vertices leaves an empty hypergraph");
    return out;
}

Hypergraph remove_hyperedge(const Hypergraph& h, int index) {
    if (index < 0 || index >= h.l())
        throw Error(Errc::range, "hyperedge index " + std::to_string(index) + " out of range");
    if (h.l() == 1) throw Error(Errc::invalid, "removing the only hyperedge leaves an empty hypergraph");
    std::vector<std::vector<int>> edges;
    for (int j = 0; j < h.l(); ++j)
        if (j != index) edges.push_back(h.edges[j]);
    std::vector<char> keep(h.k(), 0);
    for (const auto& e : edges)
        for (int v : e) keep[v] = 1;
    return restrict(h, keep, edges);
}

Graph to_graph(const Hypergraph& h) {
    Graph g;
    g.order = h.k();
    g.labels = h.labels;
    std::vector<Bits> adj(h.k(), Bits(h.k()));
    for (const auto& e : h.edges)
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                adj[e[a]].set(e[b]);
                adj[e[b]].set(e[a]);
            }
    for (int u = 0; u < h.k(); ++u)
        adj[u].for_each([&](int v) {
            if (u < v) g.edges.emplace_back(u, v);
        });
    return g;
}

namespace {

void bron_kerbosch(const std::vector<Bits>& adj, std::vector<int>& r, Bits p, Bits x,
                   std::vector<std::vector<int>>& out) {
    if (p.none() && x.none()) {
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // Tomita pivot: vertex of P u X with most neighbours in P.
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
        int c = p.count_and(adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bits cand = p;
    cand.minus(adj[pivot]);
    cand.for_each([&](int v) {
        r.push_back(v);
        bron_kerbosch(adj, r, p & adj[v], x & adj[v], out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

Hypergraph from_graph(const Graph& g, int n) {
    if (n < 3) throw Error(Errc::argument, "dimension n must be at least 3");
    std::vector<Bits> adj(g.order, Bits(g.order));
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.order || v >= g.order || u == v)
            throw Error(Errc::invalid, "graph edge out of range");
        adj[u].set(v);
        adj[v].set(u);
    }
    for (int v = 0; v < g.order; ++v)
        if (adj[v].none()) throw Error(Errc::invalid, "isolated graph vertex " + std::to_string(v) + " has no hyperedge");
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    Bits p(g.order), x(g.order);
    p.fill();
    if (g.order > 0) bron_kerbosch(adj, r, p, x, cliques);
    std::sort(cliques.begin(), cliques.end());
    for (const auto& c : cliques)
        if (static_cast<int>(c.size()) > n)
            throw Error(Errc::invalid, "clique of size " + std::to_string(c.size()) + " exceeds dimension " +
                                           std::to_string(n));
    Hypergraph h;
    h.n = n;
    h.labels = g.labels;
    if (static_cast<int>(h.labels.size()) != g.order) {
        h.labels.clear();
        for (int v = 0; v < g.order; ++v) h.labels.push_back(encode_label(v));
    }
    h.edges = std::move(cliques);
    return h;
}

namespace {

// Individualization-refinement over the vertex/hyperedge incidence graph.
class Canonizer {
public:
    Canonizer(const Hypergraph& h, std::uint64_t limit) : h_(h), k_(h.k()), nn_(h.k() + h.l()) {
        budget_.limit = limit;
        adj_.resize(nn_);
        for (int j = 0; j < h.l(); ++j)
            for (int v : h.edges[j]) {
                adj_[v].push_back(k_ + j);
                adj_[k_ + j].push_back(v);
            }
    }

    void run() {
        std::vector<int> colors(nn_);
        for (int i = 0; i < nn_; ++i) colors[i] = i < k_ ? 0 : 1;
        refine(colors);
        std::vector<int> prefix;
        search(colors, prefix);
    }

    std::vector<int> best_rank;
    std::vector<std::vector<int>> best_cert;
    std::uint64_t nodes() const { return budget_.used; }

private:
    void refine(std::vector<int>& colors) const {
        int ncolors = count_colors(colors);
        std::vector<std::vector<int>> sig(nn_);
        while (true) {
            for (int i = 0; i < nn_; ++i) {
                auto& s = sig[i];
                s.clear();
                s.push_back(colors[i]);
                for (int u : adj_[i]) s.push_back(colors[u]);
                std::sort(s.begin() + 1, s.end());
            }
            std::vector<int> order(nn_);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            int c = 0;
            for (int i = 0; i < nn_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
                colors[order[i]] = c;
            }
            int now = nn_ ? c + 1 : 0;
            if (now == ncolors) return;
            ncolors = now;
        }
    }

    static int count_colors(const std::vector<int>& colors) {
        auto c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    // Smallest non-singleton vertex cell, lowest colour first; empty at a leaf.
    std::vector<int> target_cell(const std::vector<int>& colors) const {
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < k_; ++v) cells[colors[v]].push_back(v);
        const std::vector<int>* best = nullptr;
        for (const auto& [c, members] : cells)
            if (members.size() > 1 && (!best || members.size() < best->size())) best = &members;
        return best ? *best : std::vector<int>{};
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<int> order(k_);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
        std::vector<int> rank(k_);
        for (int i = 0; i < k_; ++i) rank[order[i]] = i;
        std::vector<std::vector<int>> cert;
        cert.reserve(h_.l());
        for (const auto& e : h_.edges) {
            std::vector<int> r;
            for (int v : e) r.push_back(rank[v]);
            std::sort(r.begin(), r.end());
            cert.push_back(std::move(r));
        }
        std::sort(cert.begin(), cert.end());
        if (best_rank.empty() || cert < best_cert) {
            best_cert = std::move(cert);
            best_rank = std::move(rank);
            return;
        }
        if (cert == best_cert) {
            std::vector<int> inv(k_);
            for (int v = 0; v < k_; ++v) inv[best_rank[v]] = v;
            std::vector<int> g(k_);
            bool identity = true;
            for (int v = 0; v < k_; ++v) {
                g[v] = inv[rank[v]];
                identity &= g[v] == v;
            }
            if (!identity) generators_.push_back(std::move(g));
        }
    }

    void search(const std::vector<int>& colors, std::vector<int>& prefix) {
        budget_.tick("canonical form");
        auto cell = target_cell(colors);
        if (cell.empty()) {
            leaf(colors);
            return;
        }
        std::vector<int> explored;
        for (int v : cell) {
            if (!explored.empty() && in_explored_orbit(v, explored, prefix)) continue;
            explored.push_back(v);
            std::vector<int> next(nn_);
            for (int i = 0; i < nn_; ++i) next[i] = 2 * colors[i] + 1;
            next[v] = 2 * colors[v];
            refine(next);
            prefix.push_back(v);
            search(next, prefix);
            prefix.pop_back();
        }
    }

    // Orbit test under stored automorphisms that fix the prefix pointwise.
    bool in_explored_orbit(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        std::vector<int> parent(k_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& g : generators_) {
            bool fixes = true;
            for (int p : prefix)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < k_; ++x) parent[find(x)] = find(g[x]);
        }
        if (!any) return false;
        int rv = find(v);
        for (int u : explored)
            if (find(u) == rv) return true;
        return false;
    }

    const Hypergraph& h_;
    int k_, nn_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> generators_;
    NodeBudget budget_;
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h, std::uint64_t node_limit) {
    Canonizer c(h, node_limit);
    c.run();
    CanonicalForm out;
    out.nodes = c.nodes();
    out.relabel = c.best_rank;
    out.graph.n = h.n;
    for (int v = 0; v < h.k(); ++v) out.graph.labels.push_back(encode_label(v));
    out.graph.edges = c.best_cert;
    out.bytes = std::to_string(h.n) + ":" + serialize_mmp(out.graph);
    return out;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, std::uint64_t node_limit) {
    if (a.n != b.n || a.k() != b.k() || a.l() != b.l()) return false;
    if (a.k() == 0) return true;
    return canonical_form(a, node_limit).bytes == canonical_form(b, node_limit).bytes;
}

}  // namespace mmp
