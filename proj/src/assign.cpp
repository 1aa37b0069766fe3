#include "mmp/assign.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "bits.hpp"
#include "mmp/core.hpp"

namespace mmp {

std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run) {
    // splitmix64 over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (run + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<Bits> adjacency(const Hypergraph& h) {
    std::vector<Bits> adj(h.k(), Bits(h.k()));
    for (const auto& e : h.edges)
        for (int a : e)
            for (int b : e)
                if (a != b) adj[a].set(b);
    return adj;
}

Assignment to_list(const Bits& b) {
    Assignment a;
    b.for_each([&](int v) { a.push_back(v); });
    return a;
}

}  // namespace

bool is_admissible(const Hypergraph& h, const Assignment& ones) {
    std::vector<char> one(h.k(), 0);
    for (int v : ones) one[v] = 1;
    for (const auto& e : h.edges) {
        int c = 0;
        for (int v : e) c += one[v];
        if (c > 1) return false;
    }
    return true;
}

bool is_exact(const Hypergraph& h, const Assignment& ones) {
    std::vector<char> one(h.k(), 0);
    for (int v : ones) one[v] = 1;
    for (const auto& e : h.edges) {
        int c = 0;
        for (int v : e) c += one[v];
        if (c != 1) return false;
    }
    return true;
}

bool is_maximal(const Hypergraph& h, const Assignment& ones) {
    if (!is_admissible(h, ones)) return false;
    auto adj = adjacency(h);
    Bits covered(h.k());
    for (int v : ones) {
        covered.set(v);
        covered |= adj[v];
    }
    return covered.count() == h.k();
}

BinaryResult is_binary_subset(const Hypergraph& h, const std::vector<char>& active, std::uint64_t node_limit) {
    const int k = h.k();
    std::vector<int> edges;
    for (int j = 0; j < h.l(); ++j)
        if (active[j]) edges.push_back(j);
    const int L = static_cast<int>(edges.size());

    std::vector<Bits> ebits(L, Bits(k));
    std::vector<std::vector<int>> inc(k);
    for (int i = 0; i < L; ++i)
        for (int v : h.edges[edges[i]]) {
            ebits[i].set(v);
            inc[v].push_back(i);
        }
    // kill[v]: vertices forced to 0 once v is 1 (v included).
    std::vector<Bits> kill(k, Bits(k));
    std::vector<Bits> hits(k, Bits(L));
    for (int v = 0; v < k; ++v) {
        kill[v].set(v);
        for (int i : inc[v]) {
            kill[v] |= ebits[i];
            hits[v].set(i);
        }
    }

    BinaryResult res;
    NodeBudget budget{node_limit, 0};
    std::vector<int> chosen;
    Bits alive(k);
    alive.fill();
    Bits open(L);
    open.fill();

    auto rec = [&](auto&& self, Bits& alive, Bits& open) -> bool {
        budget.tick("binarity search");
        if (open.none()) return true;
        int pick = -1, best = k + 1;
        for (int i = open.first(); i >= 0; i = open.next(i + 1)) {
            int c = ebits[i].count_and(alive);
            if (c < best) {
                best = c;
                pick = i;
                if (c <= 1) break;
            }
        }
        if (best == 0) return false;
        Bits cand = ebits[pick] & alive;
        for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
            Bits a2 = alive;
            a2.minus(kill[v]);
            Bits o2 = open;
            o2.minus(hits[v]);
            chosen.push_back(v);
            if (self(self, a2, o2)) return true;
            chosen.pop_back();
            alive.reset(v);
        }
        return false;
    };

    res.binary = rec(rec, alive, open);
    res.nodes = budget.used;
    if (res.binary) {
        std::sort(chosen.begin(), chosen.end());
        res.witness = chosen;
    }
    return res;
}

BinaryResult is_binary(const Hypergraph& h, std::uint64_t node_limit) {
    return is_binary_subset(h, std::vector<char>(h.l(), 1), node_limit);
}

namespace {

// Maximum-weight independent set by branch and bound with greedy clique-cover bounds.
class Mwis {
public:
    Mwis(const std::vector<Bits>& adj, const std::vector<int>& w, NodeBudget& budget)
        : adj_(adj), w_(w), budget_(budget), k_(static_cast<int>(adj.size())) {}

    // Searches independent sets inside p on top of base (weight base_w); returns
    // true if one heavier than floor was found. With stop set, returns at the first.
    bool solve(const Bits& p, const Bits& base, int base_w, int floor, bool stop) {
        best_ = floor;
        stop_ = stop;
        found_ = false;
        cur_ = base;
        if (base_w > best_) record(base_w);
        if (found_ && stop_) return true;
        Bits pp = p;
        expand(pp, base_w);
        return found_;
    }

    int best() const { return best_; }
    const Bits& best_set() const { return best_set_; }

private:
    void record(int cw) {
        best_ = cw;
        best_set_ = cur_;
        found_ = true;
    }

    bool expand(Bits& p, int cw) {
        budget_.tick("independent set search");
        std::vector<int> order, bound;
        Bits u = p;
        int cum = 0;
        while (u.any()) {
            Bits q = u;
            int mx = 0;
            std::size_t start = order.size();
            while (q.any()) {
                int v = q.first();
                q &= adj_[v];
                u.reset(v);
                order.push_back(v);
                mx = std::max(mx, w_[v]);
            }
            cum += mx;
            for (std::size_t i = start; i < order.size(); ++i) bound.push_back(cum);
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (cw + bound[i] <= best_) return false;
            int v = order[i];
            Bits np = p;
            np.minus(adj_[v]);
            np.reset(v);
            cur_.set(v);
            if (cw + w_[v] > best_) {
                record(cw + w_[v]);
                if (stop_) return true;
            }
            if (np.any() && expand(np, cw + w_[v])) return true;
            cur_.reset(v);
            p.reset(v);
        }
        return false;
    }

    const std::vector<Bits>& adj_;
    const std::vector<int>& w_;
    NodeBudget& budget_;
    int k_;
    int best_ = 0;
    bool stop_ = false, found_ = false;
    Bits cur_, best_set_;
};

// Minimum-weight independent dominating set (minimum maximal independent set).
class Mwids {
public:
    Mwids(const std::vector<Bits>& adj, const std::vector<int>& w, NodeBudget& budget)
        : w_(w), budget_(budget), k_(static_cast<int>(adj.size())) {
        closed_ = adj;
        for (int v = 0; v < k_; ++v) closed_[v].set(v);
    }

    // c: vertices still selectable, u: vertices not yet dominated. Looks for a
    // solution lighter than ceiling; with stop set, returns at the first.
    bool solve(const Bits& c, const Bits& u, const Bits& base, int base_w, int ceiling, bool stop) {
        best_ = ceiling;
        stop_ = stop;
        found_ = false;
        cur_ = base;
        Bits cc = c, uu = u;
        rec(cc, uu, base_w);
        return found_;
    }

    int best() const { return best_; }
    const Bits& best_set() const { return best_set_; }

private:
    bool rec(Bits& c, Bits& u, int cw) {
        budget_.tick("independent domination search");
        if (u.none()) {
            if (cw < best_) {
                best_ = cw;
                best_set_ = cur_;
                found_ = true;
                return stop_;
            }
            return false;
        }
        // Order undominated vertices by number of options; detect dead ends.
        std::vector<std::pair<int, int>> opts;
        for (int x = u.first(); x >= 0; x = u.next(x + 1)) {
            int cnt = closed_[x].count_and(c);
            if (cnt == 0) return false;
            opts.emplace_back(cnt, x);
        }
        std::sort(opts.begin(), opts.end());
        // Lower bound from undominated vertices with pairwise disjoint options.
        int lb = 0;
        Bits used(k_);
        for (auto [cnt, x] : opts) {
            Bits o = closed_[x] & c;
            if (o.intersects(used)) continue;
            int mn = INT32_MAX;
            o.for_each([&](int y) { mn = std::min(mn, w_[y]); });
            lb += mn;
            used |= o;
        }
        if (cw + lb >= best_) return false;

        int pivot = opts.front().second;
        Bits o = closed_[pivot] & c;
        std::vector<int> cand = to_list(o);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            if (w_[a] != w_[b]) return w_[a] < w_[b];
            return closed_[a].count_and(u) > closed_[b].count_and(u);
        });
        for (int x : cand) {
            Bits c2 = c;
            c2.minus(closed_[x]);
            Bits u2 = u;
            u2.minus(closed_[x]);
            cur_.set(x);
            if (rec(c2, u2, cw + w_[x])) return true;
            cur_.reset(x);
            c.reset(x);
        }
        return false;
    }

    std::vector<Bits> closed_;
    const std::vector<int>& w_;
    NodeBudget& budget_;
    int k_;
    int best_ = 0;
    bool stop_ = false, found_ = false;
    Bits cur_, best_set_;
};

struct Extremum {
    int value = 0;
    Assignment witness;
};

Extremum max_weight_independent(const std::vector<Bits>& adj, const std::vector<int>& w, NodeBudget& budget) {
    const int k = static_cast<int>(adj.size());
    Mwis s(adj, w, budget);
    Bits all(k), none(k);
    all.fill();
    s.solve(all, none, 0, 0, false);
    Extremum ex{s.best(), {}};

    // Lexicographically smallest optimal set: fix vertices greedily in index order.
    Bits forced(k), blocked(k);
    int fw = 0;
    for (int v = 0; v < k && fw < ex.value; ++v) {
        if (blocked.test(v)) continue;
        Bits f2 = forced;
        f2.set(v);
        Bits p(k);
        p.fill();
        for (int u = 0; u <= v; ++u) p.reset(u);
        f2.for_each([&](int x) { p.minus(adj[x]); });
        p.minus(blocked);
        Mwis t(adj, w, budget);
        if (t.solve(p, f2, fw + w[v], ex.value - 1, true)) {
            forced = f2;
            fw += w[v];
            blocked |= adj[v];
        }
        blocked.set(v);
    }
    ex.witness = to_list(forced);
    return ex;
}

Extremum min_weight_maximal_independent(const std::vector<Bits>& adj, const std::vector<int>& w, int ceiling,
                                        NodeBudget& budget) {
    const int k = static_cast<int>(adj.size());
    Mwids s(adj, w, budget);
    Bits all(k), none(k);
    all.fill();
    s.solve(all, all, none, 0, ceiling, false);
    Extremum ex{s.best(), {}};

    Bits forced(k), excluded(k);
    int fw = 0;
    for (int v = 0; v < k; ++v) {
        bool adjacent = false;
        forced.for_each([&](int x) { adjacent |= adj[x].test(v); });
        if (adjacent) continue;
        Bits f2 = forced;
        f2.set(v);
        Bits c(k), u(k);
        c.fill();
        u.fill();
        for (int x = 0; x <= v; ++x) c.reset(x);
        c.minus(excluded);
        f2.for_each([&](int x) {
            c.minus(adj[x]);
            u.minus(adj[x]);
            u.reset(x);
        });
        Mwids t(adj, w, budget);
        if (t.solve(c, u, f2, fw + w[v], ex.value + 1, true)) {
            forced = f2;
            fw += w[v];
        } else {
            excluded.set(v);
        }
    }
    ex.witness = to_list(forced);
    return ex;
}

}  // namespace

IndexReport classical_indices_exact(const Hypergraph& h, std::uint64_t node_limit) {
    IndexReport r;
    r.exact = true;
    if (h.k() == 0) return r;
    auto adj = adjacency(h);
    auto m = multiplicities(h);
    std::vector<int> one(h.k(), 1);
    NodeBudget budget{node_limit, 0};

    auto a = max_weight_independent(adj, one, budget);
    r.HI_cM = a.value;
    r.w_HI_cM = a.witness;
    auto b = max_weight_independent(adj, m, budget);
    r.l_cM = r.HI_mcM = b.value;
    r.w_l_cM = r.w_HI_mcM = b.witness;
    auto c = min_weight_maximal_independent(adj, one, h.k() + 1, budget);
    r.HI_cm = c.value;
    r.w_HI_cm = c.witness;
    int total = std::accumulate(m.begin(), m.end(), 0);
    auto d = min_weight_maximal_independent(adj, m, total + 1, budget);
    r.l_cm = d.value;
    r.w_l_cm = d.witness;
    return r;
}

IndexReport classical_indices_heuristic(const Hypergraph& h, int runs, std::uint64_t seed) {
    if (runs < 1) throw Error(Errc::argument, "runs must be positive");
    IndexReport r;
    r.exact = false;
    r.runs_used = runs;
    const int k = h.k();
    if (k == 0 || h.l() == 0) return r;
    std::vector<std::vector<int>> nbr(k);
    {
        auto adj = adjacency(h);
        for (int v = 0; v < k; ++v) adj[v].for_each([&](int u) { nbr[v].push_back(u); });
    }
    auto m = multiplicities(h);
    std::vector<int> perm(k);
    std::vector<char> blocked(k);
    Assignment ones;
    bool first = true;
    for (int run = 0; run < runs; ++run) {
        std::mt19937_64 rng(run_seed(seed, run));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto& e0 = h.edges[std::uniform_int_distribution<int>(0, h.l() - 1)(rng)];
        int start = e0[std::uniform_int_distribution<int>(0, static_cast<int>(e0.size()) - 1)(rng)];
        std::fill(blocked.begin(), blocked.end(), 0);
        ones.clear();
        int weight = 0;
        auto take = [&](int v) {
            ones.push_back(v);
            weight += m[v];
            blocked[v] = 1;
            for (int u : nbr[v]) blocked[u] = 1;
        };
        take(start);
        for (int v : perm)
            if (!blocked[v]) take(v);
        int size = static_cast<int>(ones.size());
        auto sorted = [&] {
            Assignment s = ones;
            std::sort(s.begin(), s.end());
            return s;
        };
        if (first || size > r.HI_cM) {
            r.HI_cM = size;
            r.w_HI_cM = sorted();
        }
        if (first || size < r.HI_cm) {
            r.HI_cm = size;
            r.w_HI_cm = sorted();
        }
        if (first || weight > r.l_cM) {
            r.l_cM = weight;
            r.w_l_cM = sorted();
        }
        if (first || weight < r.l_cm) {
            r.l_cm = weight;
            r.w_l_cm = sorted();
        }
        first = false;
    }
    r.HI_mcM = r.l_cM;
    r.w_HI_mcM = r.w_l_cM;
    return r;
}

bool is_critical(const Hypergraph& h, std::uint64_t node_limit) {
    if (h.l() == 0 || is_binary(h, node_limit).binary) return false;
    std::vector<char> active(h.l(), 1);
    for (int j = 0; j < h.l(); ++j) {
        active[j] = 0;
        bool b = is_binary_subset(h, active, node_limit).binary;
        active[j] = 1;
        if (!b) return false;
    }
    return true;
}

bool has_parity_proof(const Hypergraph& h) {
    if (h.l() % 2 == 0) return false;
    for (int m : multiplicities(h))
        if (m % 2) return false;
    return true;
}

std::vector<Hypergraph> find_criticals(const Hypergraph& h, const CriticalSearch& opts) {
    std::vector<Hypergraph> found;
    if (h.l() == 0 || is_binary(h, opts.node_limit).binary) return found;
    std::set<std::string> seen;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> order(h.l());
    for (int d = 0; d < opts.descents; ++d) {
        if (opts.seconds > 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > opts.seconds)
            break;
        std::mt19937_64 rng(run_seed(opts.seed, d));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<char> active(h.l(), 1);
        for (int j : order) {
            active[j] = 0;
            if (is_binary_subset(h, active, opts.node_limit).binary) active[j] = 1;
        }
        std::vector<std::vector<int>> edges;
        for (int j = 0; j < h.l(); ++j)
            if (active[j]) edges.push_back(h.edges[j]);
        Hypergraph c;
        c.n = h.n;
        c.labels = h.labels;
        c.edges = std::move(edges);
        c = normalized(c);
        if (seen.insert(canonical_form(c).bytes).second) {
            found.push_back(std::move(c));
            if (opts.max_results > 0 && static_cast<int>(found.size()) >= opts.max_results) break;
        }
    }
    return found;
}

}  // namespace mmp
