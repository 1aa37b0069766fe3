#include "mmp/lang.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "bits.hpp"

namespace mmp {

const std::string_view kAlphabet =
    "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!\"#$%&'()*-/:;<=>?@[\\]^_`{|}~";

namespace {

int rank_of(char c) {
    auto p = kAlphabet.find(c);
    return p == std::string_view::npos ? -1 : static_cast<int>(p);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string where(std::size_t pos) { return " at offset " + std::to_string(pos); }

}  // namespace

std::string encode_label(std::size_t index) {
    std::string s(index / kAlphabet.size(), '+');
    s.push_back(kAlphabet[index % kAlphabet.size()]);
    return s;
}

std::size_t decode_label(std::string_view token) {
    std::size_t p = 0;
    while (p < token.size() && token[p] == '+') ++p;
    if (p + 1 != token.size()) throw Error(Errc::parse, "malformed vertex label '" + std::string(token) + "'");
    int r = rank_of(token[p]);
    if (r < 0) throw Error(Errc::parse, "illegal label character in '" + std::string(token) + "'");
    return p * kAlphabet.size() + static_cast<std::size_t>(r);
}

int max_edge_size(const Hypergraph& h) {
    int m = 0;
    for (const auto& e : h.edges) m = std::max(m, static_cast<int>(e.size()));
    return m;
}

Hypergraph normalized(const Hypergraph& h) {
    std::vector<int> map(h.k(), -1);
    Hypergraph out;
    out.n = h.n;
    for (const auto& e : h.edges) {
        std::vector<int> ne;
        ne.reserve(e.size());
        for (int v : e) {
            if (map[v] < 0) {
                map[v] = out.k();
                out.labels.push_back(h.labels[v]);
            }
            ne.push_back(map[v]);
        }
        out.edges.push_back(std::move(ne));
    }
    return out;
}

Hypergraph make_hypergraph(int k, const std::vector<std::vector<int>>& edges, int n) {
    Hypergraph h;
    for (int i = 0; i < k; ++i) h.labels.push_back(encode_label(i));
    h.edges = edges;
    h = normalized(h);
    for (int i = 0; i < h.k(); ++i) h.labels[i] = encode_label(i);
    h.n = n > 0 ? n : std::max(3, max_edge_size(h));
    return h;
}

Hypergraph parse_mmp(std::string_view text, int n) {
    Hypergraph h;
    std::unordered_map<std::string, int> index;
    std::vector<int> edge;
    std::string token;
    bool done = false;
    std::size_t pos = 0;

    auto close_edge = [&](std::size_t at) {
        if (!token.empty()) throw Error(Errc::parse, "dangling '+' prefix" + where(at));
        if (edge.empty()) throw Error(Errc::parse, "empty hyperedge" + where(at));
        h.edges.push_back(std::move(edge));
        edge.clear();
    };

    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (is_space(c)) continue;
        if (done) throw Error(Errc::parse, "unexpected character after '.'" + where(pos));
        if (c == '+') {
            token.push_back(c);
            continue;
        }
        if (c == ',') {
            close_edge(pos);
            continue;
        }
        if (c == '.') {
            close_edge(pos);
            done = true;
            continue;
        }
        if (rank_of(c) < 0) throw Error(Errc::parse, std::string("illegal character '") + c + "'" + where(pos));
        token.push_back(c);
        auto [it, fresh] = index.try_emplace(token, h.k());
        if (fresh) h.labels.push_back(token);
        if (std::find(edge.begin(), edge.end(), it->second) != edge.end())
            throw Error(Errc::parse, "vertex '" + token + "' repeated within a hyperedge" + where(pos));
        edge.push_back(it->second);
        token.clear();
    }
    if (!done) {
        if (!token.empty()) throw Error(Errc::parse, "dangling '+' prefix at end of input");
        throw Error(Errc::parse, "unterminated MMP string (missing '.')");
    }
    h.n = n > 0 ? n : std::max(3, max_edge_size(h));
    return h;
}

std::vector<Hypergraph> parse_mmp_file(std::string_view text, int n) {
    std::vector<Hypergraph> out;
    std::string pending;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first < line.size() && line[first] == '#') continue;

        std::size_t cut = 0;
        while ((cut = line.find('.')) != std::string_view::npos) {
            pending.append(line.substr(0, cut + 1));
            try {
                out.push_back(parse_mmp(pending, n));
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
            }
            pending.clear();
            line = line.substr(cut + 1);
        }
        pending.append(line);
        pending.push_back('\n');
        if (end == text.size()) break;
    }
    bool blank = std::all_of(pending.begin(), pending.end(), is_space);
    if (!blank) throw Error(Errc::parse, "unterminated MMP string at end of input");
    return out;
}

std::string serialize_mmp(const Hypergraph& h) {
    std::string s;
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
        if (j) s.push_back(',');
        for (int v : h.edges[j]) s += h.labels[v];
    }
    s.push_back('.');
    return s;
}

namespace {

Violation make_violation(std::string rule, int edge, int vertex, std::string msg) {
    return Violation{std::move(rule), edge, vertex, std::move(msg)};
}

bool connected(const Hypergraph& h) {
    if (h.k() == 0) return true;
    std::vector<int> parent(h.k());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.edges)
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
    int root = find(0);
    for (int v = 1; v < h.k(); ++v)
        if (find(v) != root) return false;
    return true;
}

}  // namespace

ValidationReport validate(const Hypergraph& h, bool strict) {
    ValidationReport r;
    r.strict = strict;
    const int k = h.k();
    if (h.n < 3) r.violations.push_back(make_violation("dimension", -1, -1, "dimension n must be at least 3"));

    std::vector<int> m(k, 0);
    for (int j = 0; j < h.l(); ++j) {
        const auto& e = h.edges[j];
        int sz = static_cast<int>(e.size());
        if (sz < 2 || sz > h.n)
            r.violations.push_back(make_violation("edge-size", j, -1,
                                                  "hyperedge " + std::to_string(j) + " has " + std::to_string(sz) +
                                                      " vertices, allowed 2.." + std::to_string(h.n)));
        std::set<int> seen;
        for (int v : e) {
            if (v < 0 || v >= k) {
                r.violations.push_back(make_violation("vertex-range", j, v, "vertex index out of range"));
                continue;
            }
            if (!seen.insert(v).second)
                r.violations.push_back(make_violation("repeated-vertex", j, v,
                                                      "vertex " + h.labels[v] + " repeated in hyperedge " +
                                                          std::to_string(j)));
            else
                ++m[v];
        }
    }
    for (int v = 0; v < k; ++v)
        if (m[v] == 0)
            r.violations.push_back(make_violation("unused-vertex", -1, v, "vertex " + h.labels[v] + " is in no hyperedge"));

    std::vector<Bits> eb;
    eb.reserve(h.l());
    for (const auto& e : h.edges) {
        Bits b(k);
        for (int v : e)
            if (v >= 0 && v < k) b.set(v);
        eb.push_back(std::move(b));
    }
    for (int a = 0; a < h.l(); ++a)
        for (int b = a + 1; b < h.l(); ++b) {
            int common = eb[a].count_and(eb[b]);
            if (eb[a] == eb[b] && eb[a].count() == static_cast<int>(h.edges[a].size())) {
                auto v = make_violation("duplicate-edge", b, -1,
                                        "hyperedge " + std::to_string(b) + " duplicates hyperedge " + std::to_string(a));
                (strict ? r.violations : r.warnings).push_back(std::move(v));
                continue;
            }
            if (common > h.n - 2)
                r.violations.push_back(make_violation("intersection", b, -1,
                                                      "hyperedges " + std::to_string(a) + " and " + std::to_string(b) +
                                                          " share " + std::to_string(common) + " vertices (max " +
                                                          std::to_string(h.n - 2) + ")"));
        }

    if (strict) {
        if (h.l() >= 2)
            for (int j = 0; j < h.l(); ++j) {
                int shared = 0;
                for (int v : h.edges[j])
                    if (v >= 0 && v < k && m[v] >= 2) ++shared;
                if (shared < 2)
                    r.violations.push_back(make_violation("attachment", j, -1,
                                                          "hyperedge " + std::to_string(j) +
                                                              " meets the rest of the hypergraph in fewer than 2 vertices"));
            }
        if (!connected(h)) r.violations.push_back(make_violation("connectivity", -1, -1, "hypergraph is not connected"));
    }
    return r;
}

std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h) {
    std::vector<std::vector<int>> a(h.k(), std::vector<int>(h.l(), 0));
    for (int j = 0; j < h.l(); ++j)
        for (int v : h.edges[j]) a[v][j] = 1;
    return a;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q.push_back('"');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

std::string dot_id(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') q.push_back('\\');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

constexpr const char* kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
                                    "#f032e6", "#9a6324", "#469990", "#800000", "#808000", "#000075"};

}  // namespace

std::string export_incidence_csv(const Hypergraph& h) {
    auto a = incidence_matrix(h);
    std::string s = "vertex";
    for (int j = 0; j < h.l(); ++j) s += "," + std::to_string(j);
    s.push_back('\n');
    for (int v = 0; v < h.k(); ++v) {
        s += csv_field(h.labels[v]);
        for (int j = 0; j < h.l(); ++j) s += a[v][j] ? ",1" : ",0";
        s.push_back('\n');
    }
    return s;
}

std::string export_dot(const Hypergraph& h) {
    std::string s = "graph mmp {\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < h.k(); ++v) s += "  " + dot_id(h.labels[v]) + ";\n";
    constexpr std::size_t ncolors = sizeof(kPalette) / sizeof(kPalette[0]);
    for (int j = 0; j < h.l(); ++j) {
        s += "  ";
        const auto& e = h.edges[j];
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += " -- ";
            s += dot_id(h.labels[e[i]]);
        }
        s += std::string(" [color=\"") + kPalette[j % ncolors] + "\", penwidth=2];\n";
    }
    s += "}\n";
    return s;
}

std::vector<Hypergraph> decompose_components(const Hypergraph& h) {
    std::vector<int> parent(h.k());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.edges)
        for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);

    std::vector<int> comp_of_root(h.k(), -1);
    std::vector<std::vector<std::vector<int>>> groups;
    for (const auto& e : h.edges) {
        if (e.empty()) continue;
        int r = find(e[0]);
        if (comp_of_root[r] < 0) {
            comp_of_root[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[comp_of_root[r]].push_back(e);
    }
    std::vector<Hypergraph> out;
    for (auto& g : groups) out.push_back(make_hypergraph(h.k(), g, h.n));
    std::stable_sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) {
        if (a.l() != b.l()) return a.l() > b.l();
        return a.k() > b.k();
    });
    return out;
}

}  // namespace mmp
