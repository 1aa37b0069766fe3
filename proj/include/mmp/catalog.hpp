#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmp/coord.hpp"
#include "mmp/hypergraph.hpp"

namespace mmp {

struct FixtureExpect {
    std::optional<bool> binary, critical, parity;
    std::optional<std::array<int, 4>> indices;  // HI_cM, HI_cm, l_cM, l_cm
    std::optional<int> HI_cM, HI_cm, l_cM, l_cm, HI_mcM, P_c;
    std::optional<std::string> HI_q, alpha_raw, lp_free, lp_bounded;
    std::optional<std::string> contains;  // name of a critical expected inside
};

struct Fixture {
    std::string name;
    int n = 3;
    std::string mmp;
    std::vector<std::pair<std::string, std::vector<std::string>>> coords;
    std::string components;
    bool ks = false;
    FixtureExpect expect;

    Hypergraph hypergraph() const;
    bool has_coords() const { return !coords.empty(); }
    Coordinatization coordinatization() const;
};

const std::vector<Fixture>& catalog();
const Fixture* find_fixture(const std::string& name);
const char* catalog_json();

}  // namespace mmp
