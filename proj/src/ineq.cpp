#include "mmp/ineq.hpp"

#include <algorithm>

#include "mmp/core.hpp"

namespace mmp {

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw Error(Errc::parse, "zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Errc::parse, "bad rational '" + s + "'");
    }
}

Rational quantum_index(const Hypergraph& h) {
    Rational s = 0;
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i) s += Rational(1, static_cast<int>(e.size()));
    return s;
}

std::vector<Rational> quantum_vertex_terms(const Hypergraph& h) {
    std::vector<Rational> t(h.k(), 0);
    for (const auto& e : h.edges)
        for (int v : e) t[v] += Rational(1, static_cast<int>(e.size()));
    return t;
}

Rational alpha_raw(const Hypergraph& h, int declared_n) {
    int n = declared_n > 0 ? declared_n : h.n;
    if (n < max_edge_size(h)) throw Error(Errc::argument, "declared dimension smaller than a hyperedge");
    bool full = std::all_of(h.edges.begin(), h.edges.end(), [&](const auto& e) { return static_cast<int>(e.size()) == n; });
    if (full) return Rational(h.k(), n);
    auto terms = quantum_vertex_terms(h);
    auto m = multiplicities(h);
    Rational s = 0;
    for (int v = 0; v < h.k(); ++v)
        if (m[v] > 0) s += terms[v] / m[v];
    return s;
}

Rational alpha_post(const Hypergraph& h) { return quantum_index(h); }

namespace {

// Dense tableau simplex with Bland's rule for max c.y, A y <= b, y >= 0, b >= 0.
std::vector<Rational> simplex(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                              const std::vector<Rational>& c, Rational& value) {
    const int m = static_cast<int>(A.size());
    const int nv = static_cast<int>(c.size());
    const int cols = nv + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) T[i][j] = A[i][j];
        T[i][nv + i] = 1;
        T[i][cols] = b[i];
    }
    std::vector<Rational> z(cols + 1, 0);
    for (int j = 0; j < nv; ++j) z[j] = -c[j];
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = nv + i;

    while (true) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw Error(Errc::infeasible, "linear program is unbounded");
        Rational piv = T[leave][enter];
        for (auto& x : T[leave]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= cols; ++j)
                if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (int j = 0; j <= cols; ++j)
                if (T[leave][j] != 0) z[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    std::vector<Rational> y(nv, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < nv) y[basis[i]] = T[i][cols];
    value = z[cols];
    return y;
}

}  // namespace

LPResult lp_alpha_star(const Hypergraph& h, const std::vector<Rational>& lo_in, const std::vector<Rational>& hi_in) {
    const int k = h.k();
    std::vector<Rational> lo = lo_in.empty() ? std::vector<Rational>(k, 0) : lo_in;
    std::vector<Rational> hi = hi_in.empty() ? std::vector<Rational>(k, 1) : hi_in;
    if (static_cast<int>(lo.size()) != k || static_cast<int>(hi.size()) != k)
        throw Error(Errc::argument, "bound vectors must have one entry per vertex");
    for (int v = 0; v < k; ++v) {
        if (lo[v] < 0 || hi[v] > 1) throw Error(Errc::argument, "bounds must lie within [0,1]");
        if (lo[v] > hi[v]) throw Error(Errc::infeasible, "lower bound exceeds upper bound at vertex " + h.labels[v]);
    }
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& e : h.edges) {
        std::vector<Rational> row(k, 0);
        Rational rhs = 1;
        for (int v : e) {
            row[v] = 1;
            rhs -= lo[v];
        }
        if (rhs < 0) throw Error(Errc::infeasible, "lower bounds over a hyperedge sum above 1");
        A.push_back(std::move(row));
        b.push_back(rhs);
    }
    for (int v = 0; v < k; ++v)
        if (hi[v] < 1) {
            std::vector<Rational> row(k, 0);
            row[v] = 1;
            A.push_back(std::move(row));
            b.push_back(hi[v] - lo[v]);
        }
    std::vector<Rational> c(k, 1);
    Rational value;
    auto y = simplex(A, b, c, value);
    LPResult r;
    r.value = value;
    for (int v = 0; v < k; ++v) {
        r.x.push_back(y[v] + lo[v]);
        r.value += lo[v];
    }
    return r;
}

InequalityReport evaluate(const Hypergraph& h, const IndexReport& idx, bool binary) {
    InequalityReport r;
    r.HI_q = quantum_index(h);
    r.alpha = idx.HI_cM;
    r.alpha_r = alpha_raw(h);
    r.alpha_p = alpha_post(h);
    r.alpha_star_free = lp_alpha_star(h).value;
    const int l = h.l();
    auto lt = [&](std::string name, int a, int b) {
        r.verdicts.push_back({std::move(name), std::to_string(a), "<", std::to_string(b), a < b});
    };
    lt("v", idx.HI_mcM, l);
    lt("e_Max", idx.l_cM, l);
    lt("e_min", idx.l_cm, l);
    r.verdicts.push_back({"alpha_r", std::to_string(idx.HI_cM), "<=", to_string(r.alpha_r), Rational(idx.HI_cM) <= r.alpha_r});
    lt("alpha_p", idx.HI_cM, l);
    r.verdicts.push_back({"GLS", std::to_string(idx.HI_cM), "<=", to_string(r.alpha_star_free),
                          Rational(idx.HI_cM) <= r.alpha_star_free});
    r.contextual = !binary;
    return r;
}

}  // namespace mmp
