#include "mmp/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mmp/core.hpp"

namespace mmp {

using nlohmann::json;

namespace {

std::string fnv_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json labels_of(const Hypergraph& h, const Assignment& a) {
    json out = json::array();
    for (int v : a) out.push_back(h.labels[v]);
    return out;
}

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "unknown"; }

}  // namespace

Analysis analyze(const Hypergraph& h, const AnalyzeOptions& opts) {
    Analysis a;
    a.name = opts.name;
    a.h = h;
    try {
        a.id = fnv_hex(canonical_form(h, opts.node_limit).bytes);
    } catch (const Error& e) {
        if (e.code() != Errc::budget) throw;
        a.id = "raw-" + fnv_hex(std::to_string(h.n) + ":" + serialize_mmp(h));
        a.indeterminate = true;
    }
    a.parity = has_parity_proof(h);
    try {
        a.binary = is_binary(h, opts.node_limit).binary;
    } catch (const Error& e) {
        if (e.code() != Errc::budget) throw;
        a.indeterminate = true;
    }
    if (opts.critical && a.binary) {
        if (*a.binary) {
            a.critical = false;
        } else {
            try {
                a.critical = is_critical(h, opts.node_limit);
            } catch (const Error& e) {
                if (e.code() != Errc::budget) throw;
                a.indeterminate = true;
            }
        }
    }
    bool done = false;
    if (opts.exact) {
        try {
            a.idx = classical_indices_exact(h, opts.node_limit);
            done = true;
        } catch (const Error& e) {
            if (e.code() != Errc::budget) throw;
            a.indeterminate = true;
        }
    }
    if (!done) a.idx = classical_indices_heuristic(h, opts.runs, opts.seed);
    if (a.binary) a.ineq = evaluate(h, a.idx, *a.binary);
    return a;
}

std::string to_json(const Analysis& a, int indent) {
    json j;
    if (!a.name.empty()) j["name"] = a.name;
    j["id"] = a.id;
    j["k"] = a.h.k();
    j["l"] = a.h.l();
    j["n"] = a.h.n;
    j["mmp"] = serialize_mmp(a.h);
    std::map<int, int> hist;
    for (int m : multiplicities(a.h)) ++hist[m];
    json mh = json::object();
    for (auto [m, c] : hist) mh[std::to_string(m)] = c;
    j["multiplicities"] = mh;
    j["binary"] = opt_bool(a.binary);
    j["critical"] = opt_bool(a.critical);
    j["parity"] = a.parity;
    const auto& x = a.idx;
    j["indices"] = {{"HI_cM", x.HI_cM},
                    {"HI_cm", x.HI_cm},
                    {"HI_mcM", x.HI_mcM},
                    {"l_cM", x.l_cM},
                    {"l_cm", x.l_cm},
                    {"exact", x.exact},
                    {"runs", x.runs_used},
                    {"witness",
                     {{"HI_cM", labels_of(a.h, x.w_HI_cM)},
                      {"HI_cm", labels_of(a.h, x.w_HI_cm)},
                      {"l_cM", labels_of(a.h, x.w_l_cM)},
                      {"l_cm", labels_of(a.h, x.w_l_cm)}}}};
    if (a.ineq) {
        const auto& r = *a.ineq;
        json v = json::array();
        for (const auto& d : r.verdicts)
            v.push_back({{"name", d.name}, {"lhs", d.lhs}, {"rel", d.rel}, {"rhs", d.rhs}, {"satisfied", d.satisfied}});
        j["inequalities"] = {{"HI_q", to_string(r.HI_q)},
                             {"alpha", r.alpha},
                             {"alpha_r", to_string(r.alpha_r)},
                             {"alpha_p", to_string(r.alpha_p)},
                             {"alpha_star", to_string(r.alpha_star_free)},
                             {"verdicts", v}};
        j["classification"] = r.contextual ? "contextual" : "noncontextual";
    } else {
        j["inequalities"] = nullptr;
        j["classification"] = nullptr;
    }
    j["indeterminate"] = a.indeterminate;
    return j.dump(indent);
}

std::string to_text(const Analysis& a) {
    std::ostringstream o;
    if (!a.name.empty()) o << a.name << "  ";
    o << a.h.k() << "-" << a.h.l() << "  n=" << a.h.n << "  id=" << a.id << "\n";
    std::map<int, int> hist;
    for (int m : multiplicities(a.h)) ++hist[m];
    o << "multiplicities:";
    for (auto [m, c] : hist) o << " m" << m << "x" << c;
    o << "\n";
    o << "binary: " << yes_no(a.binary) << "  critical: " << yes_no(a.critical)
      << "  parity: " << (a.parity ? "yes" : "no") << "\n";
    const auto& x = a.idx;
    o << "HI_cM  HI_cm  l_cM  l_cm  HI_mcM  " << (x.exact ? "exact" : "heuristic (" + std::to_string(x.runs_used) + " runs)")
      << "\n";
    char row[96];
    std::snprintf(row, sizeof row, "%-6d %-6d %-5d %-5d %-6d\n", x.HI_cM, x.HI_cm, x.l_cM, x.l_cm, x.HI_mcM);
    o << row;
    if (a.ineq) {
        const auto& r = *a.ineq;
        o << "HI_q=" << to_string(r.HI_q) << "  alpha_r=" << to_string(r.alpha_r) << "  alpha_p=" << to_string(r.alpha_p)
          << "  alpha*=" << to_string(r.alpha_star_free) << "\n";
        for (const auto& d : r.verdicts)
            o << d.name << ": " << d.lhs << " " << d.rel << " " << d.rhs << "  " << (d.satisfied ? "satisfied" : "violated")
              << "\n";
        o << "classification: " << (r.contextual ? "contextual" : "noncontextual") << "\n";
    }
    if (a.indeterminate) o << "note: search budget exhausted; some values are bounds\n";
    return o.str();
}

std::string hypergraph_json(const Hypergraph& h, int indent) {
    json edges = json::array();
    for (const auto& e : h.edges) {
        json row = json::array();
        for (int v : e) row.push_back(h.labels[v]);
        edges.push_back(row);
    }
    json j = {{"n", h.n}, {"k", h.k()}, {"l", h.l()}, {"vertices", h.labels}, {"edges", edges},
              {"multiplicities", multiplicities(h)}, {"mmp", serialize_mmp(h)}};
    return j.dump(indent);
}

std::string validation_json(const ValidationReport& r, int indent) {
    auto list = [](const std::vector<Violation>& vs) {
        json a = json::array();
        for (const auto& v : vs)
            a.push_back({{"rule", v.rule}, {"edge", v.edge}, {"vertex", v.vertex}, {"message", v.message}});
        return a;
    };
    json j = {{"strict", r.strict}, {"ok", r.ok()}, {"violations", list(r.violations)}, {"warnings", list(r.warnings)}};
    return j.dump(indent);
}

std::string coords_json(const Hypergraph& h, const Coordinatization& c, int indent) {
    json j = json::object();
    for (int v = 0; v < h.k(); ++v) {
        json row = json::array();
        for (const auto& z : c.vecs[v]) row.push_back({z.real(), z.imag()});
        j[h.labels[v]] = row;
    }
    return j.dump(indent);
}

Coordinatization parse_coords_json(const Hypergraph& h, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::parse, std::string("coordinatization JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(Errc::parse, "coordinatization JSON must map labels to vectors");
    Coordinatization c;
    c.n = h.n;
    for (int v = 0; v < h.k(); ++v) {
        const auto& label = h.labels[v];
        if (!j.contains(label)) throw Error(Errc::invalid, "no vector for vertex " + label);
        const auto& row = j[label];
        if (!row.is_array() || static_cast<int>(row.size()) != h.n)
            throw Error(Errc::invalid, "vector for vertex " + label + " needs " + std::to_string(h.n) + " entries");
        CVector vec;
        std::vector<std::string> sym;
        for (const auto& x : row) {
            if (x.is_string()) {
                vec.push_back(parse_scalar(x.get<std::string>()));
                sym.push_back(x.get<std::string>());
            } else if (x.is_number()) {
                vec.push_back(cplx(x.get<double>(), 0));
                sym.push_back(x.dump());
            } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
                vec.push_back(cplx(x[0].get<double>(), x[1].get<double>()));
                sym.push_back(x.dump());
            } else {
                throw Error(Errc::parse, "bad vector entry for vertex " + label);
            }
        }
        if (norm(vec) == 0) throw Error(Errc::invalid, "zero vector for vertex " + label);
        c.vecs.push_back(std::move(vec));
        c.symbols.push_back(std::move(sym));
    }
    return c;
}

}  // namespace mmp
