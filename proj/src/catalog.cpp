#include "mmp/catalog.hpp"

#include "json.hpp"

#include "mmp/lang.hpp"

namespace mmp {

namespace detail {
extern const char* const kCatalogJson;
}

namespace {

template <class T>
void opt(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

std::vector<Fixture> load() {
    auto doc = nlohmann::json::parse(detail::kCatalogJson);
    std::vector<Fixture> out;
    for (const auto& j : doc) {
        Fixture f;
        f.name = j.at("name");
        f.n = j.at("n");
        f.mmp = j.at("mmp");
        f.ks = j.value("ks", false);
        f.components = j.value("components", "");
        if (j.contains("coords"))
            for (auto it = j["coords"].begin(); it != j["coords"].end(); ++it)
                f.coords.emplace_back(it.key(), it.value().get<std::vector<std::string>>());
        const auto& e = j.at("expect");
        auto& x = f.expect;
        opt(e, "binary", x.binary);
        opt(e, "critical", x.critical);
        opt(e, "parity", x.parity);
        opt(e, "indices", x.indices);
        opt(e, "HI_cM", x.HI_cM);
        opt(e, "HI_cm", x.HI_cm);
        opt(e, "l_cM", x.l_cM);
        opt(e, "l_cm", x.l_cm);
        opt(e, "HI_mcM", x.HI_mcM);
        opt(e, "P_c", x.P_c);
        opt(e, "HI_q", x.HI_q);
        opt(e, "alpha_raw", x.alpha_raw);
        opt(e, "lp_free", x.lp_free);
        opt(e, "lp_bounded", x.lp_bounded);
        opt(e, "contains", x.contains);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

Hypergraph Fixture::hypergraph() const { return parse_mmp(mmp, n); }

Coordinatization Fixture::coordinatization() const { return make_coordinatization(hypergraph(), coords); }

const std::vector<Fixture>& catalog() {
    static const std::vector<Fixture> c = load();
    return c;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return &f;
    return nullptr;
}

const char* catalog_json() { return detail::kCatalogJson; }

}  // namespace mmp
