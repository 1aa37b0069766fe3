#include "mmp/mmp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "mmp/assign.hpp"
#include "mmp/catalog.hpp"
#include "mmp/coord.hpp"
#include "mmp/core.hpp"
#include "mmp/ineq.hpp"
#include "mmp/lang.hpp"
#include "mmp/report.hpp"

struct mmp_hypergraph {
    mmp::Hypergraph h;
};

struct mmp_coords {
    mmp::Coordinatization c;
};

namespace {

thread_local std::string g_error;

mmp_status fail(mmp_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

mmp_status code_of(mmp::Errc e) {
    switch (e) {
        case mmp::Errc::parse: return MMP_E_PARSE;
        case mmp::Errc::invalid: return MMP_E_INVALID;
        case mmp::Errc::budget: return MMP_E_BUDGET;
        case mmp::Errc::range: return MMP_E_RANGE;
        case mmp::Errc::infeasible: return MMP_E_INFEASIBLE;
        case mmp::Errc::io: return MMP_E_IO;
        case mmp::Errc::argument: return MMP_E_ARGUMENT;
    }
    return MMP_E_INTERNAL;
}

template <class F>
mmp_status guard(F&& f) {
    try {
        g_error.clear();
        f();
        return MMP_OK;
    } catch (const mmp::Error& e) {
        return fail(code_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MMP_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MMP_E_INTERNAL, e.what());
    }
}

void need(const void* p, const char* what) {
    if (!p) throw mmp::Error(mmp::Errc::argument, std::string("null ") + what);
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

mmp_hypergraph* wrap(mmp::Hypergraph h) { return new mmp_hypergraph{std::move(h)}; }

void put_array(std::vector<mmp::Hypergraph>&& hs, mmp_hypergraph*** out, size_t* count) {
    auto** arr = static_cast<mmp_hypergraph**>(std::calloc(hs.empty() ? 1 : hs.size(), sizeof(mmp_hypergraph*)));
    if (!arr) throw std::bad_alloc();
    for (size_t i = 0; i < hs.size(); ++i) arr[i] = wrap(std::move(hs[i]));
    *out = arr;
    *count = hs.size();
}

void put_indices(const mmp::IndexReport& r, mmp_indices* out) {
    *out = {r.HI_cM, r.HI_cm, r.HI_mcM, r.l_cM, r.l_cm, r.exact ? 1 : 0, r.runs_used};
}

std::vector<mmp::Rational> bounds(const char* const* v, int k) {
    std::vector<mmp::Rational> out;
    if (!v) return out;
    for (int i = 0; i < k; ++i) {
        need(v[i], "bound");
        out.push_back(mmp::parse_rational(v[i]));
    }
    return out;
}

}  // namespace

extern "C" {

const char* mmp_last_error(void) { return g_error.c_str(); }

void mmp_free_string(char* s) { std::free(s); }

mmp_status mmp_parse(const char* text, int n, mmp_hypergraph** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        *out = wrap(mmp::parse_mmp(text, n));
    });
}

mmp_status mmp_parse_file(const char* text, int n, mmp_hypergraph*** out, size_t* count) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        need(count, "count");
        put_array(mmp::parse_mmp_file(text, n), out, count);
    });
}

void mmp_hypergraph_free(mmp_hypergraph* h) { delete h; }

mmp_status mmp_clone(const mmp_hypergraph* h, mmp_hypergraph** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = wrap(h->h);
    });
}

mmp_status mmp_serialize(const mmp_hypergraph* h, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = dup(mmp::serialize_mmp(h->h));
    });
}

int mmp_k(const mmp_hypergraph* h) { return h ? h->h.k() : -1; }
int mmp_l(const mmp_hypergraph* h) { return h ? h->h.l() : -1; }
int mmp_n(const mmp_hypergraph* h) { return h ? h->h.n : -1; }

int mmp_multiplicities(const mmp_hypergraph* h, int* m, int cap) {
    if (!h) return -1;
    auto ms = mmp::multiplicities(h->h);
    for (int i = 0; m && i < cap && i < static_cast<int>(ms.size()); ++i) m[i] = ms[i];
    return static_cast<int>(ms.size());
}

mmp_status mmp_validate(const mmp_hypergraph* h, int strict, int* ok, char** report_json) {
    return guard([&] {
        need(h, "hypergraph");
        auto r = mmp::validate(h->h, strict != 0);
        if (ok) *ok = r.ok() ? 1 : 0;
        if (report_json) *report_json = dup(mmp::validation_json(r));
    });
}

mmp_status mmp_export(const mmp_hypergraph* h, const char* format, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(format, "format");
        need(out, "output");
        std::string f = format;
        if (f == "mmp")
            *out = dup(mmp::serialize_mmp(h->h) + "\n");
        else if (f == "json")
            *out = dup(mmp::hypergraph_json(h->h, 1) + "\n");
        else if (f == "dot")
            *out = dup(mmp::export_dot(h->h));
        else if (f == "incidence")
            *out = dup(mmp::export_incidence_csv(h->h));
        else
            throw mmp::Error(mmp::Errc::argument, "unknown export format '" + f + "'");
    });
}

mmp_status mmp_strip(const mmp_hypergraph* h, int fixpoint, mmp_hypergraph** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = wrap(mmp::strip_unishared(h->h, fixpoint != 0));
    });
}

mmp_status mmp_remove_edge(const mmp_hypergraph* h, int index, mmp_hypergraph** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = wrap(mmp::remove_hyperedge(h->h, index));
    });
}

mmp_status mmp_canonical(const mmp_hypergraph* h, uint64_t node_limit, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = dup(mmp::canonical_form(h->h, node_limit).bytes);
    });
}

mmp_status mmp_is_isomorphic(const mmp_hypergraph* a, const mmp_hypergraph* b, uint64_t node_limit, int* out) {
    return guard([&] {
        need(a, "hypergraph");
        need(b, "hypergraph");
        need(out, "output");
        *out = mmp::is_isomorphic(a->h, b->h, node_limit) ? 1 : 0;
    });
}

void mmp_hypergraph_array_free(mmp_hypergraph** hs, size_t count) {
    if (!hs) return;
    for (size_t i = 0; i < count; ++i) delete hs[i];
    std::free(hs);
}

mmp_status mmp_components(const mmp_hypergraph* h, mmp_hypergraph*** out, size_t* count) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        need(count, "count");
        put_array(mmp::decompose_components(h->h), out, count);
    });
}

mmp_status mmp_is_binary(const mmp_hypergraph* h, uint64_t node_limit, int* out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = mmp::is_binary(h->h, node_limit).binary ? 1 : 0;
    });
}

mmp_status mmp_is_critical(const mmp_hypergraph* h, uint64_t node_limit, int* out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = mmp::is_critical(h->h, node_limit) ? 1 : 0;
    });
}

int mmp_has_parity_proof(const mmp_hypergraph* h) { return h && mmp::has_parity_proof(h->h) ? 1 : 0; }

mmp_status mmp_indices_exact(const mmp_hypergraph* h, uint64_t node_limit, mmp_indices* out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        put_indices(mmp::classical_indices_exact(h->h, node_limit), out);
    });
}

mmp_status mmp_indices_heuristic(const mmp_hypergraph* h, int runs, uint64_t seed, mmp_indices* out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        if (runs < 1) throw mmp::Error(mmp::Errc::argument, "runs must be positive");
        put_indices(mmp::classical_indices_heuristic(h->h, runs, seed), out);
    });
}

mmp_critical_opts mmp_critical_defaults(void) {
    mmp::CriticalSearch d;
    return {d.seed, d.descents, d.seconds, d.max_results, d.node_limit};
}

mmp_status mmp_find_criticals(const mmp_hypergraph* h, const mmp_critical_opts* opts, mmp_hypergraph*** out,
                              size_t* count) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        need(count, "count");
        mmp::CriticalSearch o;
        if (opts) {
            o.seed = opts->seed;
            o.descents = opts->descents;
            o.seconds = opts->seconds;
            o.max_results = opts->max_results;
            o.node_limit = opts->node_limit;
        }
        put_array(mmp::find_criticals(h->h, o), out, count);
    });
}

mmp_analyze_opts mmp_analyze_defaults(void) {
    mmp::AnalyzeOptions d;
    return {d.exact ? 1 : 0, d.runs, d.seed, d.node_limit, d.critical ? 1 : 0, -1, 0, nullptr};
}

mmp_status mmp_analyze(const mmp_hypergraph* h, const mmp_analyze_opts* opts, char** out, int* indeterminate) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        mmp_analyze_opts o = opts ? *opts : mmp_analyze_defaults();
        mmp::AnalyzeOptions a;
        a.exact = o.exact != 0;
        a.runs = o.runs;
        a.seed = o.seed;
        a.node_limit = o.node_limit;
        a.critical = o.critical != 0;
        if (o.name) a.name = o.name;
        if (a.runs < 1) throw mmp::Error(mmp::Errc::argument, "runs must be positive");
        auto r = mmp::analyze(h->h, a);
        *out = dup(o.text ? mmp::to_text(r) : mmp::to_json(r, o.indent));
        if (indeterminate) *indeterminate = r.indeterminate ? 1 : 0;
    });
}

mmp_status mmp_quantum_index(const mmp_hypergraph* h, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = dup(mmp::to_string(mmp::quantum_index(h->h)));
    });
}

mmp_status mmp_alpha_raw(const mmp_hypergraph* h, int declared_n, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = dup(mmp::to_string(mmp::alpha_raw(h->h, declared_n)));
    });
}

mmp_status mmp_lp_alpha_star(const mmp_hypergraph* h, const char* const* lo, const char* const* hi, char** value,
                             char** x_json) {
    return guard([&] {
        need(h, "hypergraph");
        need(value, "output");
        auto r = mmp::lp_alpha_star(h->h, bounds(lo, h->h.k()), bounds(hi, h->h.k()));
        std::string v = mmp::to_string(r.value);
        if (x_json) {
            nlohmann::json j = nlohmann::json::object();
            for (int i = 0; i < h->h.k(); ++i) j[h->h.labels[i]] = mmp::to_string(r.x[i]);
            *x_json = dup(j.dump());
        }
        *value = dup(v);
    });
}

void mmp_coords_free(mmp_coords* c) { delete c; }

mmp_status mmp_coords_from_json(const mmp_hypergraph* h, const char* json, mmp_coords** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(json, "json");
        need(out, "output");
        *out = new mmp_coords{mmp::parse_coords_json(h->h, json)};
    });
}

mmp_status mmp_coords_to_json(const mmp_hypergraph* h, const mmp_coords* c, int indent, char** out) {
    return guard([&] {
        need(h, "hypergraph");
        need(c, "coordinatization");
        need(out, "output");
        *out = dup(mmp::coords_json(h->h, c->c, indent));
    });
}

mmp_status mmp_coords_verify(const mmp_hypergraph* h, const mmp_coords* c, double eps, int* ok, char** violations_json) {
    return guard([&] {
        need(h, "hypergraph");
        need(c, "coordinatization");
        auto r = mmp::verify_coordinatization(h->h, c->c, eps > 0 ? eps : 1e-10);
        if (ok) *ok = r.ok ? 1 : 0;
        if (violations_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& v : r.violations)
                j.push_back({{"edge", v.edge}, {"u", h->h.labels[v.u]}, {"v", h->h.labels[v.v]}});
            *violations_json = dup(j.dump());
        }
    });
}

mmp_status mmp_operator_failures(const mmp_hypergraph* h, const mmp_coords* c, double tol, int* failures) {
    return guard([&] {
        need(h, "hypergraph");
        need(c, "coordinatization");
        need(failures, "output");
        *failures = static_cast<int>(mmp::operator_identity_failures(h->h, c->c, tol > 0 ? tol : 1e-9).size());
    });
}

mmp_status mmp_classical_operator_max(const mmp_hypergraph* h, int* out) {
    return guard([&] {
        need(h, "hypergraph");
        need(out, "output");
        *out = mmp::classical_operator_max(h->h);
    });
}

mmp_status mmp_count_vectors(const char* components, int n, uint64_t* out) {
    return guard([&] {
        need(components, "components");
        need(out, "output");
        *out = mmp::enumerate_vectors(mmp::parse_components(components), n).size();
    });
}

mmp_status mmp_generate_master(const char* components, int n, uint64_t node_limit, mmp_hypergraph** h,
                               mmp_coords** c) {
    return guard([&] {
        need(components, "components");
        need(h, "output");
        auto m = mmp::generate_master(mmp::parse_components(components), n, node_limit);
        *h = wrap(std::move(m.h));
        if (c) *c = new mmp_coords{std::move(m.c)};
    });
}

mmp_status mmp_vecfind(const mmp_hypergraph* h, const char* components, uint64_t node_limit, uint64_t seed,
                       mmp_coords** out, int* found, int* complete) {
    return guard([&] {
        need(h, "hypergraph");
        need(components, "components");
        need(out, "output");
        auto r = mmp::vecfind(h->h, mmp::parse_components(components), node_limit, seed);
        *out = r.found ? new mmp_coords{std::move(r.c)} : nullptr;
        if (found) *found = r.found ? 1 : 0;
        if (complete) *complete = r.complete ? 1 : 0;
    });
}

mmp_status mmp_fill(const mmp_hypergraph* h, const mmp_coords* c, mmp_hypergraph** hout, mmp_coords** cout) {
    return guard([&] {
        need(h, "hypergraph");
        need(c, "coordinatization");
        need(hout, "output");
        auto f = mmp::fill(h->h, c->c);
        *hout = wrap(std::move(f.h));
        if (cout) *cout = new mmp_coords{std::move(f.c)};
    });
}

const char* mmp_catalog_json(void) { return mmp::catalog_json(); }

size_t mmp_catalog_size(void) { return mmp::catalog().size(); }

const char* mmp_catalog_name(size_t i) {
    const auto& c = mmp::catalog();
    return i < c.size() ? c[i].name.c_str() : nullptr;
}

mmp_status mmp_catalog_get(const char* name, mmp_hypergraph** h, mmp_coords** c) {
    return guard([&] {
        need(name, "name");
        need(h, "output");
        const auto* f = mmp::find_fixture(name);
        if (!f) throw mmp::Error(mmp::Errc::argument, std::string("no fixture named '") + name + "'");
        auto g = f->hypergraph();
        if (c) *c = f->has_coords() ? new mmp_coords{f->coordinatization()} : nullptr;
        *h = wrap(std::move(g));
    });
}

}  // extern "C"
