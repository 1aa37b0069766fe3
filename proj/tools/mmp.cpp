#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmp/mmp.h"

namespace {

enum Exit { kOk = 0, kBudget = 1, kInput = 2 };

struct Failure {
    int code;
    std::string msg;
};

struct Str {
    char* p = nullptr;
    ~Str() { mmp_free_string(p); }
    std::string get() const { return p ? p : ""; }
};

struct HG {
    mmp_hypergraph* p = nullptr;
    HG() = default;
    explicit HG(mmp_hypergraph* x) : p(x) {}
    HG(HG&& o) noexcept : p(o.p) { o.p = nullptr; }
    HG(const HG&) = delete;
    ~HG() { mmp_hypergraph_free(p); }
};

struct Coords {
    mmp_coords* p = nullptr;
    ~Coords() { mmp_coords_free(p); }
};

void check(mmp_status s) {
    if (s == MMP_OK) return;
    throw Failure{s == MMP_E_BUDGET ? kBudget : kInput, mmp_last_error()};
}

std::uint64_t budget() {
    const char* env = std::getenv("MMP_BUDGET_NODES");
    if (!env || !*env) return MMP_UNLIMITED;
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (*end || v == 0) throw Failure{kInput, std::string("MMP_BUDGET_NODES must be a positive integer, got '") + env + "'"};
    return v;
}

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInput, "cannot read " + path};
    return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{kInput, "cannot write " + path};
}

struct Input {
    std::string name;
    HG h;
};

// "@name" takes a hypergraph from the built-in catalog.
std::vector<Input> load(const std::string& src, int n) {
    std::vector<Input> out;
    if (src.size() > 1 && src[0] == '@') {
        Input in;
        in.name = src.substr(1);
        check(mmp_catalog_get(in.name.c_str(), &in.h.p, nullptr));
        out.push_back(std::move(in));
        return out;
    }
    std::string text = slurp(src);
    mmp_hypergraph** arr = nullptr;
    size_t count = 0;
    mmp_status s = mmp_parse_file(text.c_str(), n, &arr, &count);
    if (s != MMP_OK) throw Failure{kInput, (src == "-" ? std::string("stdin") : src) + ": " + mmp_last_error()};
    std::string base = src == "-" ? "stdin" : src.substr(src.find_last_of('/') + 1);
    for (size_t i = 0; i < count; ++i) {
        Input in;
        in.name = count == 1 ? base : base + ":" + std::to_string(i + 1);
        in.h.p = arr[i];
        arr[i] = nullptr;
        out.push_back(std::move(in));
    }
    mmp_hypergraph_array_free(arr, count);
    if (out.empty()) throw Failure{kInput, src + ": no MMP string found"};
    return out;
}

Input load_one(const std::string& src, int n) {
    auto v = load(src, n);
    if (v.size() != 1) throw Failure{kInput, src + ": expected a single MMP string"};
    return std::move(v.front());
}

std::string serialize(const mmp_hypergraph* h) {
    Str s;
    check(mmp_serialize(h, &s.p));
    return s.get();
}

std::string shape(const mmp_hypergraph* h) { return std::to_string(mmp_k(h)) + "-" + std::to_string(mmp_l(h)); }

std::string render(const mmp_hypergraph* h, const std::string& format) {
    Str s;
    check(mmp_export(h, format.c_str(), &s.p));
    return s.get();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        spit(out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MMP hypergraph analysis"};
    app.require_subcommand(1);
    int n = 0;
    app.add_option("--n", n, "dimension (default: max(3, largest hyperedge))")->check(CLI::NonNegativeNumber);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "binarity, criticality, indices and inequalities");
    std::vector<std::string> a_inputs;
    bool a_heur = false, a_exact = false, a_json = false, a_text = false, a_nocrit = false;
    int a_runs = 50000;
    std::uint64_t a_seed = 1;
    analyze->add_option("inputs", a_inputs, "MMP files, '-' for stdin, @name for a catalog entry")->required();
    analyze->add_flag("--exact", a_exact, "exact branch and bound (default)");
    analyze->add_flag("--heuristic", a_heur, "randomized greedy runs");
    analyze->add_option("--runs", a_runs, "heuristic runs")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", a_seed, "heuristic seed");
    analyze->add_flag("--json", a_json, "JSON lines output (default)");
    analyze->add_flag("--text", a_text, "table-like text output");
    analyze->add_flag("--no-critical", a_nocrit, "skip the criticality test");
    analyze->add_option("--n", n, "dimension");

    // generate
    auto* generate = app.add_subcommand("generate", "master hypergraph from vector components");
    int g_dim = 0;
    std::string g_comps, g_out;
    generate->add_option("--dim", g_dim, "dimension")->required()->check(CLI::Range(2, 16));
    generate->add_option("--components", g_comps, "component list, e.g. \"0,±1\"")->required();
    generate->add_option("--out", g_out, "write the MMP string here and vectors to <out>.coords.json");

    // strip
    auto* strip = app.add_subcommand("strip", "drop vertices that lie in a single hyperedge");
    std::string s_in, s_format = "mmp", s_out;
    bool s_fix = false;
    strip->add_option("input", s_in)->required();
    strip->add_flag("--fixpoint", s_fix, "repeat until no such vertex remains");
    strip->add_option("--format", s_format)->check(CLI::IsMember({"mmp", "json", "dot", "incidence"}));
    strip->add_option("--out", s_out);
    strip->add_option("--n", n, "dimension");

    // fill
    auto* fill = app.add_subcommand("fill", "complete every hyperedge to a basis");
    std::string f_in, f_coords, f_out, f_format = "mmp";
    fill->add_option("input", f_in)->required();
    fill->add_option("--coords", f_coords, "coordinatization JSON (label -> vector)");
    fill->add_option("--components", g_comps, "search vectors with vecfind when --coords is absent");
    fill->add_option("--format", f_format)->check(CLI::IsMember({"mmp", "json", "dot", "incidence"}));
    fill->add_option("--out", f_out, "write the MMP string here and vectors to <out>.coords.json");
    fill->add_option("--n", n, "dimension");

    // critical
    auto* critical = app.add_subcommand("critical", "criticality test and critical subhypergraph search");
    std::string c_in;
    bool c_find = false;
    int c_descents = 100, c_max = 0;
    double c_seconds = 0;
    std::uint64_t c_seed = 1;
    critical->add_option("input", c_in)->required();
    critical->add_flag("--find", c_find, "list critical subhypergraphs");
    critical->add_option("--descents", c_descents)->check(CLI::PositiveNumber);
    critical->add_option("--seconds", c_seconds)->check(CLI::NonNegativeNumber);
    critical->add_option("--max", c_max)->check(CLI::NonNegativeNumber);
    critical->add_option("--seed", c_seed);
    critical->add_option("--n", n, "dimension");

    // vecfind
    auto* vecfind = app.add_subcommand("vecfind", "search a coordinatization over given components");
    std::string v_in, v_comps, v_out;
    std::uint64_t v_seed = 0;
    vecfind->add_option("input", v_in)->required();
    vecfind->add_option("--components", v_comps)->required();
    vecfind->add_option("--seed", v_seed, "0 keeps enumeration order");
    vecfind->add_option("--out", v_out);
    vecfind->add_option("--n", n, "dimension");

    // export
    auto* exp = app.add_subcommand("export", "write the hypergraph in another format");
    std::string e_in, e_format = "mmp", e_out;
    exp->add_option("input", e_in)->required();
    exp->add_option("--format", e_format)->check(CLI::IsMember({"mmp", "json", "dot", "incidence"}));
    exp->add_option("--out", e_out);
    exp->add_option("--n", n, "dimension");

    // validate
    auto* validate = app.add_subcommand("validate", "check the MMP language rules");
    std::string va_in;
    bool va_strict = false;
    validate->add_option("input", va_in)->required();
    validate->add_flag("--strict", va_strict);
    validate->add_option("--n", n, "dimension");

    // catalog
    auto* cat = app.add_subcommand("catalog", "built-in fixtures");
    std::string cat_name;
    bool cat_json = false;
    cat->add_option("name", cat_name, "show one entry");
    cat->add_flag("--json", cat_json, "dump the whole catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::uint64_t limit = budget();
        if (*analyze) {
            if (a_exact && a_heur) throw Failure{kInput, "--exact and --heuristic are exclusive"};
            if (a_json && a_text) throw Failure{kInput, "--json and --text are exclusive"};
            int code = kOk;
            for (const auto& src : a_inputs) {
                for (auto& in : load(src, n)) {
                    mmp_analyze_opts o = mmp_analyze_defaults();
                    o.exact = a_heur ? 0 : 1;
                    o.runs = a_runs;
                    o.seed = a_seed;
                    o.node_limit = limit;
                    o.critical = a_nocrit ? 0 : 1;
                    o.text = a_text ? 1 : 0;
                    o.name = in.name.c_str();
                    Str s;
                    int indet = 0;
                    check(mmp_analyze(in.h.p, &o, &s.p, &indet));
                    std::cout << s.get() << (a_text ? "" : "\n");
                    if (indet) code = kBudget;
                }
            }
            return code;
        }
        if (*generate) {
            HG h;
            Coords c;
            check(mmp_generate_master(g_comps.c_str(), g_dim, limit, &h.p, &c.p));
            std::cout << "master " << shape(h.p) << "\n";
            mmp_hypergraph** parts = nullptr;
            size_t count = 0;
            check(mmp_components(h.p, &parts, &count));
            if (count > 1) {
                std::cout << "components:";
                for (size_t i = 0; i < count; ++i) std::cout << (i ? " + " : " ") << shape(parts[i]);
                std::cout << "\n";
            }
            mmp_hypergraph_array_free(parts, count);
            std::string s = serialize(h.p) + "\n";
            if (g_out.empty()) {
                std::cout << s;
            } else {
                Str js;
                check(mmp_coords_to_json(h.p, c.p, 1, &js.p));
                spit(g_out, s);
                spit(g_out + ".coords.json", js.get() + "\n");
            }
            return kOk;
        }
        if (*strip) {
            auto in = load_one(s_in, n);
            HG out;
            check(mmp_strip(in.h.p, s_fix ? 1 : 0, &out.p));
            emit(render(out.p, s_format), s_out);
            return kOk;
        }
        if (*fill) {
            auto in = load_one(f_in, n);
            Coords c;
            if (!f_coords.empty()) {
                check(mmp_coords_from_json(in.h.p, slurp(f_coords).c_str(), &c.p));
            } else if (!g_comps.empty()) {
                int found = 0, complete = 0;
                check(mmp_vecfind(in.h.p, g_comps.c_str(), limit, 0, &c.p, &found, &complete));
                if (!found) {
                    std::cerr << "no coordinatization found over the components" << (complete ? "" : " within budget") << "\n";
                    return complete ? kInput : kBudget;
                }
            } else if (f_in.size() > 1 && f_in[0] == '@') {
                HG tmp;
                check(mmp_catalog_get(f_in.c_str() + 1, &tmp.p, &c.p));
                if (!c.p) throw Failure{kInput, "fixture has no vectors; pass --coords or --components"};
            } else {
                throw Failure{kInput, "fill needs --coords or --components"};
            }
            int ok = 0;
            Str viol;
            check(mmp_coords_verify(in.h.p, c.p, 0, &ok, &viol.p));
            if (!ok) throw Failure{kInput, "coordinatization fails orthogonality: " + viol.get()};
            HG out;
            Coords oc;
            check(mmp_fill(in.h.p, c.p, &out.p, &oc.p));
            if (f_out.empty()) {
                emit(render(out.p, f_format), "");
            } else {
                Str js;
                check(mmp_coords_to_json(out.p, oc.p, 1, &js.p));
                spit(f_out, render(out.p, f_format));
                spit(f_out + ".coords.json", js.get() + "\n");
            }
            return kOk;
        }
        if (*critical) {
            auto in = load_one(c_in, n);
            int crit = 0;
            check(mmp_is_critical(in.h.p, limit, &crit));
            std::cout << "critical: " << (crit ? "yes" : "no") << "\n";
            if (c_find) {
                mmp_critical_opts o = mmp_critical_defaults();
                o.seed = c_seed;
                o.descents = c_descents;
                o.seconds = c_seconds;
                o.max_results = c_max;
                o.node_limit = limit;
                mmp_hypergraph** arr = nullptr;
                size_t count = 0;
                check(mmp_find_criticals(in.h.p, &o, &arr, &count));
                for (size_t i = 0; i < count; ++i) std::cout << shape(arr[i]) << " " << serialize(arr[i]) << "\n";
                mmp_hypergraph_array_free(arr, count);
            }
            return kOk;
        }
        if (*vecfind) {
            auto in = load_one(v_in, n);
            Coords c;
            int found = 0, complete = 0;
            check(mmp_vecfind(in.h.p, v_comps.c_str(), limit, v_seed, &c.p, &found, &complete));
            if (!found) {
                std::cout << (complete ? "none: no coordinatization over these components\n"
                                       : "none: budget exhausted before the search completed\n");
                return complete ? kOk : kBudget;
            }
            Str js;
            check(mmp_coords_to_json(in.h.p, c.p, 1, &js.p));
            emit(js.get() + "\n", v_out);
            return kOk;
        }
        if (*exp) {
            auto in = load_one(e_in, n);
            emit(render(in.h.p, e_format), e_out);
            return kOk;
        }
        if (*validate) {
            auto in = load_one(va_in, n);
            int ok = 0;
            Str rep;
            check(mmp_validate(in.h.p, va_strict ? 1 : 0, &ok, &rep.p));
            std::cout << rep.get() << "\n";
            return ok ? kOk : kInput;
        }
        if (*cat) {
            if (cat_json) {
                std::cout << mmp_catalog_json();
                return kOk;
            }
            if (!cat_name.empty()) {
                HG h;
                Coords c;
                check(mmp_catalog_get(cat_name.c_str(), &h.p, &c.p));
                std::cout << shape(h.p) << " n=" << mmp_n(h.p) << " " << serialize(h.p) << "\n";
                if (c.p) {
                    Str js;
                    check(mmp_coords_to_json(h.p, c.p, 1, &js.p));
                    std::cout << js.get() << "\n";
                }
                return kOk;
            }
            for (size_t i = 0; i < mmp_catalog_size(); ++i) {
                HG h;
                check(mmp_catalog_get(mmp_catalog_name(i), &h.p, nullptr));
                std::cout << mmp_catalog_name(i) << "\t" << shape(h.p) << "\tn=" << mmp_n(h.p) << "\n";
            }
            return kOk;
        }
    } catch (const Failure& f) {
        std::cerr << "mmp: " << f.msg << "\n";
        return f.code;
    }
    return kOk;
}
