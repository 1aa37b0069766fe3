#include "mmp/coord.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "bits.hpp"
#include "mmp/assign.hpp"
#include "mmp/core.hpp"

namespace mmp {

namespace {

const cplx kOmega{-0.5, std::sqrt(3.0) / 2};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

cplx parse_scalar(std::string_view token) {
    std::string t = trim(token);
    if (t.empty()) throw Error(Errc::parse, "empty vector component");
    std::size_t p = 0;
    double sign = 1;
    if (t[p] == '+' || t[p] == '-') {
        if (t[p] == '-') sign = -1;
        ++p;
    }
    std::size_t q = p;
    while (q < t.size() && (std::isdigit(static_cast<unsigned char>(t[q])) || t[q] == '.')) ++q;
    double coef = 1;
    if (q > p) {
        try {
            std::size_t used = 0;
            coef = std::stod(t.substr(p, q - p), &used);
            if (used != q - p) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error(Errc::parse, "bad coefficient in component '" + t + "'");
        }
    }
    std::string sym = t.substr(q);
    cplx base = 1;
    if (sym.empty())
        base = 1;
    else if (sym == "i")
        base = cplx(0, 1);
    else if (sym == "w")
        base = kOmega;
    else if (sym == "w2")
        base = std::conj(kOmega);
    else if (sym == "r2")
        base = std::sqrt(2.0);
    else if (sym == "r3")
        base = std::sqrt(3.0);
    else if (sym == "r5")
        base = std::sqrt(5.0);
    else if (sym == "tau")
        base = (1 + std::sqrt(5.0)) / 2;
    else
        throw Error(Errc::parse, "unknown component symbol in '" + t + "'");
    if (q == p && sym.empty()) throw Error(Errc::parse, "bad component '" + t + "'");
    return sign * coef * base;
}

ComponentSet parse_components(std::string_view list) {
    ComponentSet cs;
    std::string s(list);
    // "±" is two bytes in UTF-8; normalise to a marker first.
    for (std::size_t at; (at = s.find("\xC2\xB1")) != std::string::npos;) s.replace(at, 2, "~");
    std::size_t start = 0;
    auto add = [&](const std::string& tok) {
        cplx v = parse_scalar(tok);
        for (const auto& a : cs.atoms)
            if (std::abs(a.value - v) <= 1e-12) return;
        cs.atoms.push_back({v, tok});
    };
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string tok = trim(std::string_view(s).substr(start, end - start));
        if (!tok.empty()) {
            if (tok[0] == '~') {
                add(tok.substr(1));
                add("-" + tok.substr(1));
            } else {
                add(tok);
            }
        }
        start = end + 1;
    }
    if (cs.atoms.empty()) throw Error(Errc::argument, "empty component set");
    return cs;
}

Coordinatization make_coordinatization(const Hypergraph& h,
                                       const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
    std::map<std::string, const std::vector<std::string>*> by_label;
    for (const auto& [label, toks] : entries) by_label[label] = &toks;
    Coordinatization c;
    c.n = h.n;
    for (int v = 0; v < h.k(); ++v) {
        auto it = by_label.find(h.labels[v]);
        if (it == by_label.end()) throw Error(Errc::invalid, "no vector for vertex " + h.labels[v]);
        const auto& toks = *it->second;
        if (static_cast<int>(toks.size()) != h.n)
            throw Error(Errc::invalid, "vector for vertex " + h.labels[v] + " has " + std::to_string(toks.size()) +
                                           " components, expected " + std::to_string(h.n));
        CVector vec;
        for (const auto& t : toks) vec.push_back(parse_scalar(t));
        if (norm(vec) == 0) throw Error(Errc::invalid, "zero vector for vertex " + h.labels[v]);
        c.vecs.push_back(std::move(vec));
        c.symbols.push_back(toks);
    }
    return c;
}

cplx inner(const CVector& a, const CVector& b) {
    cplx s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const CVector& v) { return std::sqrt(std::real(inner(v, v))); }

bool orthogonal(const CVector& a, const CVector& b, double eps) {
    return std::abs(inner(a, b)) <= eps * norm(a) * norm(b);
}

CVector canonical_vector(const CVector& v) {
    double mx = 0;
    for (const auto& x : v) mx = std::max(mx, std::abs(x));
    if (mx == 0) throw Error(Errc::invalid, "zero vector has no canonical form");
    cplx pivot = 0;
    for (const auto& x : v)
        if (std::abs(x) >= mx * (1 - 1e-9)) {
            pivot = x;
            break;
        }
    CVector out;
    for (const auto& x : v) out.push_back(x / pivot);
    return out;
}

bool equivalent(const CVector& a, const CVector& b, double eps) {
    auto ca = canonical_vector(a), cb = canonical_vector(b);
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (std::abs(ca[i] - cb[i]) > eps) return false;
    return true;
}

VerifyResult verify_coordinatization(const Hypergraph& h, const Coordinatization& c, double eps) {
    if (static_cast<int>(c.vecs.size()) != h.k())
        throw Error(Errc::invalid, "coordinatization covers " + std::to_string(c.vecs.size()) + " of " +
                                       std::to_string(h.k()) + " vertices");
    VerifyResult r;
    for (int j = 0; j < h.l(); ++j) {
        const auto& e = h.edges[j];
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (!orthogonal(c.vecs[e[a]], c.vecs[e[b]], eps)) r.violations.push_back({j, e[a], e[b]});
    }
    r.ok = r.violations.empty();
    return r;
}

namespace {

// Rounded canonical entries, used as a hash key for projective classes.
std::vector<long long> class_key(const CVector& v) {
    std::vector<long long> key;
    for (const auto& x : canonical_vector(v)) {
        key.push_back(std::llround(x.real() * 1e8));
        key.push_back(std::llround(x.imag() * 1e8));
    }
    for (auto& x : key)
        if (x == 0) x = 0;  // fold negative zero
    return key;
}

}  // namespace

std::vector<CVector> enumerate_vectors(const ComponentSet& cs, int n, std::uint64_t limit,
                                       std::vector<std::vector<int>>* atom_index) {
    if (n < 1) throw Error(Errc::argument, "dimension must be positive");
    const int a = static_cast<int>(cs.atoms.size());
    double total = std::pow(static_cast<double>(a), n);
    if (total > static_cast<double>(limit) || total > 5e8)
        throw Error(Errc::budget, "component enumeration exceeds budget (" + std::to_string(total) + " tuples)");
    std::vector<CVector> out;
    std::set<std::vector<long long>> seen;
    std::vector<int> digit(n, 0);
    while (true) {
        CVector v(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            v[i] = cs.atoms[digit[i]].value;
            if (std::abs(v[i]) > 1e-14) zero = false;
        }
        if (!zero && seen.insert(class_key(v)).second) {
            out.push_back(v);
            if (atom_index) atom_index->push_back(digit);
        }
        int i = n - 1;
        while (i >= 0 && ++digit[i] == a) digit[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

namespace {

std::vector<Bits> orthogonality(const std::vector<CVector>& vecs, double eps) {
    const int N = static_cast<int>(vecs.size());
    std::vector<Bits> orth(N, Bits(N));
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (orthogonal(vecs[a], vecs[b], eps)) {
                orth[a].set(b);
                orth[b].set(a);
            }
    return orth;
}

void cliques_of_size(const std::vector<Bits>& adj, int n, std::vector<int>& cur, const Bits& cand,
                     std::vector<std::vector<int>>& out, NodeBudget& budget) {
    budget.tick("basis enumeration");
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) + cand.count() < n) return;
    for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
        Bits next = cand & adj[v];
        // keep only higher indices so each basis appears once, in order
        for (int u = next.first(); u >= 0 && u <= v; u = next.next(u + 1)) next.reset(u);
        cur.push_back(v);
        cliques_of_size(adj, n, cur, next, out, budget);
        cur.pop_back();
    }
}

}  // namespace

Master generate_master(const ComponentSet& cs, int n, std::uint64_t limit) {
    if (n < 3) throw Error(Errc::argument, "dimension must be at least 3");
    std::vector<std::vector<int>> digits;
    auto vecs = enumerate_vectors(cs, n, limit, &digits);
    auto orth = orthogonality(vecs, cs.eps);
    const int N = static_cast<int>(vecs.size());
    std::vector<std::vector<int>> bases;
    std::vector<int> cur;
    Bits all(N);
    all.fill();
    NodeBudget budget{limit, 0};
    cliques_of_size(orth, n, cur, all, bases, budget);

    Master m;
    m.h.n = n;
    m.c.n = n;
    std::vector<int> map(N, -1);
    for (const auto& b : bases) {
        std::vector<int> e;
        for (int v : b) {
            if (map[v] < 0) {
                map[v] = m.h.k();
                m.h.labels.push_back(encode_label(map[v]));
                m.c.vecs.push_back(vecs[v]);
                std::vector<std::string> sym;
                for (int d : digits[v]) sym.push_back(cs.atoms[d].symbol);
                m.c.symbols.push_back(std::move(sym));
            }
            e.push_back(map[v]);
        }
        m.h.edges.push_back(std::move(e));
    }
    return m;
}

VecfindResult vecfind(const Hypergraph& h, const ComponentSet& cs, std::uint64_t node_limit, std::uint64_t seed) {
    VecfindResult res;
    const int k = h.k();
    const int n = h.n;
    std::vector<std::vector<int>> digits;
    auto vecs = enumerate_vectors(cs, n, kUnlimited, &digits);
    const int N = static_cast<int>(vecs.size());
    auto orth = orthogonality(vecs, cs.eps);

    std::vector<std::vector<int>> nbr(k), inc(k);
    {
        std::vector<std::set<int>> s(k);
        for (int j = 0; j < h.l(); ++j)
            for (int a : h.edges[j]) {
                inc[a].push_back(j);
                for (int b : h.edges[j])
                    if (a != b) s[a].insert(b);
            }
        for (int v = 0; v < k; ++v) nbr[v].assign(s[v].begin(), s[v].end());
    }
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(run_seed(seed, 0));
        std::shuffle(order.begin(), order.end(), rng);
    }

    std::vector<int> val(k, -1);
    Bits used(N);
    NodeBudget budget{node_limit, 0};
    bool aborted = false;

    // For a hyperedge short of a full basis, the vectors orthogonal to all of it
    // must not be taken by any vertex outside it.
    auto common_orth = [&](int j) {
        Bits c(N);
        c.fill();
        for (int v : h.edges[j]) c &= orth[val[v]];
        return c;
    };
    auto assigned_edge = [&](int j) {
        for (int v : h.edges[j])
            if (val[v] < 0) return false;
        return true;
    };

    auto consistent = [&](int v) {
        int x = val[v];
        for (int j = 0; j < h.l(); ++j) {
            const auto& e = h.edges[j];
            if (static_cast<int>(e.size()) >= n || !assigned_edge(j)) continue;
            bool contains = std::find(e.begin(), e.end(), v) != e.end();
            if (contains) {
                Bits c = common_orth(j);
                for (int u = 0; u < k; ++u)
                    if (val[u] >= 0 && c.test(val[u]) && std::find(e.begin(), e.end(), u) == e.end()) return false;
            } else {
                bool all = true;
                for (int u : e) all &= orth[val[u]].test(x);
                if (all) return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int done) -> bool {
        if (done == k) return true;
        try {
            budget.tick("vecfind");
        } catch (const Error&) {
            aborted = true;
            return false;
        }
        int pick = -1, best_a = -1, best_d = -1;
        for (int v = 0; v < k; ++v) {
            if (val[v] >= 0) continue;
            int a = 0;
            for (int u : nbr[v]) a += val[u] >= 0;
            int d = static_cast<int>(nbr[v].size());
            if (a > best_a || (a == best_a && d > best_d)) {
                pick = v;
                best_a = a;
                best_d = d;
            }
        }
        Bits dom(N);
        dom.fill();
        for (int u : nbr[pick])
            if (val[u] >= 0) dom &= orth[val[u]];
        dom.minus(used);
        for (int x : order) {
            if (!dom.test(x)) continue;
            val[pick] = x;
            used.set(x);
            if (consistent(pick) && self(self, done + 1)) return true;
            if (aborted) return false;
            used.reset(x);
            val[pick] = -1;
        }
        return false;
    };

    res.found = rec(rec, 0);
    res.complete = res.found || !aborted;
    res.nodes = budget.used;
    if (res.found) {
        res.c.n = n;
        for (int v = 0; v < k; ++v) {
            res.c.vecs.push_back(vecs[val[v]]);
            std::vector<std::string> sym;
            for (int d : digits[val[v]]) sym.push_back(cs.atoms[d].symbol);
            res.c.symbols.push_back(std::move(sym));
        }
    }
    return res;
}

Filled fill(const Hypergraph& h, const Coordinatization& c) {
    if (static_cast<int>(c.vecs.size()) != h.k()) throw Error(Errc::invalid, "coordinatization size mismatch");
    const int n = h.n;
    Filled f;
    f.h = h;
    f.c = c;
    f.c.n = n;
    std::set<std::string> taken(h.labels.begin(), h.labels.end());
    std::size_t next_label = 0;
    auto fresh = [&] {
        while (taken.count(encode_label(next_label))) ++next_label;
        std::string s = encode_label(next_label++);
        taken.insert(s);
        return s;
    };
    for (auto& e : f.h.edges) {
        if (static_cast<int>(e.size()) >= n) continue;
        std::vector<CVector> basis;
        for (int v : e) {
            CVector u = c.vecs[v];
            double nu = norm(u);
            for (auto& x : u) x /= nu;
            for (const auto& b : basis) {
                cplx p = inner(b, u);
                for (int i = 0; i < n; ++i) u[i] -= p * b[i];
            }
            double r = norm(u);
            if (r < 1e-8) throw Error(Errc::invalid, "hyperedge vectors are linearly dependent");
            for (auto& x : u) x /= r;
            basis.push_back(u);
        }
        int have = static_cast<int>(basis.size());
        for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
            CVector u(n, 0);
            u[i] = 1;
            for (const auto& b : basis) {
                cplx p = inner(b, u);
                for (int t = 0; t < n; ++t) u[t] -= p * b[t];
            }
            double r = norm(u);
            if (r < 1e-6) continue;
            for (auto& x : u) x /= r;
            basis.push_back(u);
        }
        for (int i = have; i < n; ++i) {
            CVector u = basis[i];
            // scale so the largest entry is 1 for readable output
            u = canonical_vector(u);
            int id = f.h.k();
            f.h.labels.push_back(fresh());
            f.c.vecs.push_back(u);
            std::vector<std::string> sym;
            for (const auto& x : u) {
                char buf[64];
                if (std::abs(x.imag()) < 1e-12)
                    std::snprintf(buf, sizeof buf, "%.12g", x.real());
                else
                    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", x.real(), x.imag());
                sym.push_back(buf);
            }
            f.c.symbols.push_back(std::move(sym));
            e.push_back(id);
        }
    }
    return f;
}

std::vector<int> operator_identity_failures(const Hypergraph& h, const Coordinatization& c, double tol) {
    const int n = h.n;
    using Mat = Eigen::MatrixXcd;
    std::vector<int> bad;
    Mat id = Mat::Identity(n, n);
    double sign = (n % 2 == 0) ? -1.0 : 1.0;
    for (int j = 0; j < h.l(); ++j) {
        const auto& e = h.edges[j];
        if (static_cast<int>(e.size()) != n) continue;
        Mat prod = id;
        for (int v : e) {
            Eigen::VectorXcd x(n);
            for (int i = 0; i < n; ++i) x(i) = c.vecs[v][i];
            Mat o = 2.0 * x * x.adjoint() / x.squaredNorm() - id;
            prod = prod * o;
        }
        if ((prod - sign * id).cwiseAbs().maxCoeff() > tol) bad.push_back(j);
    }
    return bad;
}

int classical_operator_max(const Hypergraph& h) {
    const int k = h.k();
    if (k > 30) throw Error(Errc::range, "classical operator maximum limited to 30 vertices");
    const int sigma = (h.n % 2 == 0) ? -1 : 1;
    std::vector<std::vector<int>> inc(k);
    for (int j = 0; j < h.l(); ++j)
        for (int v : h.edges[j]) inc[v].push_back(j);
    // Gray code walk: flipping one vertex flips the sign of each edge term it touches.
    std::vector<int> term(h.l(), sigma);
    int sum = sigma * h.l();
    int best = sum;
    const std::uint64_t steps = 1ULL << k;
    for (std::uint64_t g = 1; g < steps; ++g) {
        int v = std::countr_zero(g);
        for (int j : inc[v]) {
            sum -= 2 * term[j];
            term[j] = -term[j];
        }
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace mmp
