#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mmp/catalog.hpp"
#include "mmp/core.hpp"
#include "mmp/lang.hpp"

using namespace mmp;

namespace {

Hypergraph relabeled(const Hypergraph& h, std::mt19937_64& rng) {
    std::vector<int> perm(h.k());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges) {
        std::vector<int> f;
        for (int v : e) f.push_back(perm[v]);
        std::shuffle(f.begin(), f.end(), rng);
        edges.push_back(f);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return make_hypergraph(h.k(), edges, h.n);
}

}  // namespace

TEST_CASE("multiplicities") {
    auto h = parse_mmp("123,345,561,246.");
    CHECK(multiplicities(h) == std::vector<int>{2, 2, 2, 2, 2, 2});
    h = parse_mmp("123,345.");
    CHECK(multiplicities(h) == std::vector<int>{1, 1, 2, 1, 1});
}

TEST_CASE("strip drops multiplicity-1 vertices") {
    auto h = parse_mmp("123,345,561.");
    CHECK(serialize_mmp(strip_unishared(h)) == "13,35,51.");
    auto chain = parse_mmp("12,23,34.");
    auto once = strip_unishared(chain);
    CHECK(serialize_mmp(once) == "23.");
    CHECK_THROWS_AS(strip_unishared(chain, true), Error);
}

TEST_CASE("Yu-Oh 25-16 strips to 13-16") {
    auto h = find_fixture("yu-oh-25-16")->hypergraph();
    auto s = strip_unishared(h);
    CHECK(s.k() == 13);
    CHECK(s.l() == 16);
    CHECK(is_isomorphic(s, find_fixture("yu-oh-13-16")->hypergraph()));
}

TEST_CASE("remove_hyperedge") {
    auto h = parse_mmp("123,345,561.");
    auto g = remove_hyperedge(h, 1);
    CHECK(g.l() == 2);
    CHECK(g.k() == 5);
    CHECK_THROWS_AS(remove_hyperedge(h, 3), Error);
}

TEST_CASE("graph conversion") {
    auto h = parse_mmp("123,345,561.");
    auto g = to_graph(h);
    CHECK(g.order == 6);
    CHECK(g.edges.size() == 9);
    // the triangle 135 is a clique too
    CHECK(from_graph(g, 3).l() == 4);
    auto y = find_fixture("pentagon-5-5")->hypergraph();
    CHECK(is_isomorphic(from_graph(to_graph(y), 3), y));
}

TEST_CASE("canonical form separates non-isomorphic hypergraphs") {
    auto pent = parse_mmp("12,23,34,45,51.");
    auto path = parse_mmp("12,23,34,45,56.");
    CHECK_FALSE(is_isomorphic(pent, path));
    CHECK(is_isomorphic(pent, parse_mmp("13,35,52,24,41.")));
    CHECK_FALSE(is_isomorphic(parse_mmp("12,34.", 3), parse_mmp("12,23.", 3)));
    CHECK_FALSE(is_isomorphic(parse_mmp("12,23,31.", 3), parse_mmp("12,23,31.", 4)));
}

TEST_CASE("canonical form invariant under 100 relabelings") {
    std::mt19937_64 rng(7);
    for (const char* name : {"18-9", "pentagon-5-5", "yu-oh-13-16", "24-24", "ck-51-37", "pm-9-18"}) {
        CAPTURE(name);
        auto h = find_fixture(name)->hypergraph();
        auto ref = canonical_form(h).bytes;
        for (int i = 0; i < 100; ++i) {
            auto g = relabeled(h, rng);
            REQUIRE(canonical_form(g).bytes == ref);
        }
    }
}

TEST_CASE("canonical relabel maps onto the canonical graph") {
    auto h = find_fixture("18-9")->hypergraph();
    auto cf = canonical_form(h);
    CHECK(cf.graph.k() == h.k());
    CHECK(cf.graph.l() == h.l());
    std::vector<int> seen(h.k(), 0);
    for (int v : cf.relabel) ++seen.at(v);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST_CASE("canonical form respects node budget") {
    auto h = find_fixture("24-24")->hypergraph();
    CHECK_THROWS_AS(canonical_form(h, 1), Error);
}
