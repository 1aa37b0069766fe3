#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mmp/assign.hpp"
#include "mmp/catalog.hpp"
#include "mmp/coord.hpp"
#include "mmp/core.hpp"
#include "mmp/lang.hpp"

using namespace mmp;

namespace {

// All n-subsets of mutually orthogonal vectors, by exhaustive enumeration.
int count_bases(const std::vector<CVector>& vs, int n) {
    const int k = static_cast<int>(vs.size());
    int count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n) {
            ++count;
            return;
        }
        for (int v = from; v < k; ++v) {
            bool ok = true;
            for (int u : pick) ok = ok && orthogonal(vs[u], vs[v]);
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

bool all_full(const Hypergraph& h) {
    return std::all_of(h.edges.begin(), h.edges.end(), [&](const auto& e) { return static_cast<int>(e.size()) == h.n; });
}

}  // namespace

TEST_CASE("scalar tokens") {
    CHECK(parse_scalar("0") == cplx(0, 0));
    CHECK(parse_scalar("-2") == cplx(-2, 0));
    CHECK(parse_scalar("i") == cplx(0, 1));
    CHECK(parse_scalar("-i") == cplx(0, -1));
    CHECK(std::abs(parse_scalar("r2") - cplx(std::sqrt(2.0), 0)) < 1e-15);
    CHECK(std::abs(parse_scalar("2r2") - cplx(2 * std::sqrt(2.0), 0)) < 1e-15);
    CHECK(std::abs(parse_scalar("w") - std::polar(1.0, 2 * M_PI / 3)) < 1e-15);
    CHECK(std::abs(parse_scalar("w2") - std::polar(1.0, -2 * M_PI / 3)) < 1e-15);
    CHECK(std::abs(parse_scalar("tau") - cplx((1 + std::sqrt(5.0)) / 2, 0)) < 1e-15);
    CHECK_THROWS_AS(parse_scalar("q"), Error);
    CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("component lists expand signs") {
    auto cs = parse_components("0,±1");
    CHECK(cs.atoms.size() == 3);
    CHECK(parse_components("0,1,-1").atoms.size() == 3);
    CHECK(parse_components("0,±1,±i").atoms.size() == 5);
    CHECK_THROWS_AS(parse_components(""), Error);
}

TEST_CASE("projective vector counts") {
    CHECK(enumerate_vectors(parse_components("0,1"), 3).size() == 7);
    CHECK(enumerate_vectors(parse_components("0,±1"), 3).size() == 13);
    CHECK(enumerate_vectors(parse_components("0,±1"), 4).size() == 40);
    CHECK(enumerate_vectors(parse_components("0,±1"), 6).size() == 364);
    CHECK_THROWS_AS(enumerate_vectors(parse_components("0,±1"), 6, 10), Error);
}

TEST_CASE("vector helpers") {
    CVector a{1, 0, 0}, b{0, cplx(0, 1), 0}, c{2, 0, 0};
    CHECK(orthogonal(a, b));
    CHECK_FALSE(orthogonal(a, c));
    CHECK(equivalent(a, c));
    CHECK(equivalent(CVector{cplx(0, 1), 1}, CVector{-1, cplx(0, 1)}));
    CHECK(std::abs(inner(CVector{cplx(0, 1)}, CVector{1}) - cplx(0, -1)) < 1e-15);
    auto cv = canonical_vector(CVector{0, -2, 1});
    CHECK(std::abs(cv[1] - cplx(1, 0)) < 1e-15);
}

TEST_CASE("master edges equal all orthogonal bases (oracle)") {
    for (auto [comps, n] : {std::pair{"0,1", 3}, std::pair{"0,±1", 3}, std::pair{"0,±1", 4}, std::pair{"0,±1,2", 3}}) {
        CAPTURE(comps);
        CAPTURE(n);
        auto cs = parse_components(comps);
        auto vs = enumerate_vectors(cs, n);
        auto m = generate_master(cs, n);
        CHECK(m.h.l() == count_bases(vs, n));
        CHECK(verify_coordinatization(m.h, m.c).ok);
        for (const auto& e : m.h.edges) CHECK(static_cast<int>(e.size()) == n);
        int sum = 0;
        for (int x : multiplicities(m.h)) sum += x;
        CHECK(sum == n * m.h.l());
    }
}

TEST_CASE("small masters") {
    auto m = generate_master(parse_components("0,1"), 3);
    CHECK(m.h.k() == 3);
    CHECK(m.h.l() == 1);
    CHECK(is_binary(m.h).binary);

    auto p = generate_master(parse_components("0,±1"), 4);
    CHECK(p.h.k() == 40);
    CHECK(p.h.l() == 32);
    auto parts = decompose_components(p.h);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].k() == 24);
    CHECK(parts[0].l() == 24);
    CHECK(is_isomorphic(parts[0], find_fixture("24-24")->hypergraph()));
}

TEST_CASE("verify reports violating pairs") {
    auto h = parse_mmp("12,23,31.");
    Coordinatization c;
    c.n = 3;
    c.vecs = {CVector{1, 0, 0}, CVector{0, 1, 0}, CVector{1, 1, 0}};
    auto r = verify_coordinatization(h, c);
    CHECK_FALSE(r.ok);
    CHECK(r.violations.size() == 2);
}

TEST_CASE("catalog coordinatizations verify") {
    for (const auto& f : catalog()) {
        if (!f.has_coords()) continue;
        CAPTURE(f.name);
        auto h = f.hypergraph();
        auto c = f.coordinatization();
        CHECK(verify_coordinatization(h, c, 1e-10).ok);
        for (const auto& v : c.vecs) CHECK(v.size() == static_cast<std::size_t>(h.n));
    }
}

TEST_CASE("operator identities on full coordinatized fixtures") {
    int checked = 0;
    for (const auto& f : catalog()) {
        if (!f.has_coords()) continue;
        auto h = f.hypergraph();
        if (!all_full(h)) continue;
        CAPTURE(f.name);
        CHECK(operator_identity_failures(h, f.coordinatization(), 1e-9).empty());
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("operator identity fails for a non-orthogonal edge") {
    auto h = parse_mmp("123.");
    Coordinatization c;
    c.n = 3;
    c.vecs = {CVector{1, 0, 0}, CVector{0, 1, 0}, CVector{1, 0, 1}};
    CHECK(operator_identity_failures(h, c).size() == 1);
}

TEST_CASE("classical operator maximum matches brute force") {
    std::mt19937_64 rng(5);
    for (const char* name : {"pentagon-5-5", "triangle-3-3", "18-9", "gamma0-8-7", "pm-9-6"}) {
        auto h = find_fixture(name)->hypergraph();
        const int sigma = h.n % 2 == 0 ? -1 : 1;
        int best = -1 << 30;
        for (std::uint32_t s = 0; s < (1u << h.k()); ++s) {
            int sum = 0;
            for (const auto& e : h.edges) {
                int p = sigma;
                for (int v : e) p *= (s >> v & 1) ? -1 : 1;
                sum += p;
            }
            best = std::max(best, sum);
        }
        CAPTURE(name);
        CHECK(classical_operator_max(h) == best);
    }
}

TEST_CASE("classical operator maximum equals l exactly for binary even-dimension fixtures") {
    for (const auto& f : catalog()) {
        auto h = f.hypergraph();
        if (h.n % 2 || h.k() > 26 || !all_full(h)) continue;
        CAPTURE(f.name);
        CHECK((classical_operator_max(h) == h.l()) == is_binary(h).binary);
    }
}

TEST_CASE("classical operator maximum range check") {
    auto h = find_fixture("bub-49-36")->hypergraph();
    CHECK_THROWS_AS(classical_operator_max(h), Error);
}

TEST_CASE("vecfind finds coordinatizations") {
    for (const char* name : {"pentagon-5-5", "18-9", "gamma0-8-7", "yu-oh-13-16"}) {
        CAPTURE(name);
        const auto* f = find_fixture(name);
        auto h = f->hypergraph();
        auto r = vecfind(h, parse_components(f->components));
        REQUIRE(r.found);
        CHECK(verify_coordinatization(h, r.c).ok);
    }
}

TEST_CASE("vecfind proves absence") {
    auto h = find_fixture("triangle-3-3")->hypergraph();
    auto r = vecfind(h, parse_components("0,±1"));
    CHECK_FALSE(r.found);
    CHECK(r.complete);
    auto b = vecfind(find_fixture("18-9")->hypergraph(), parse_components("0,±1"), 3);
    CHECK_FALSE(b.found);
    CHECK_FALSE(b.complete);
}

TEST_CASE("fill completes hyperedges and strip undoes it") {
    int checked = 0;
    for (const auto& f : catalog()) {
        if (!f.has_coords()) continue;
        auto h = f.hypergraph();
        auto base = strip_unishared(h, true);
        auto m = multiplicities(h);
        if (std::any_of(m.begin(), m.end(), [](int x) { return x < 2; })) continue;
        CAPTURE(f.name);
        auto filled = fill(h, f.coordinatization());
        CHECK(all_full(filled.h));
        CHECK(verify_coordinatization(filled.h, filled.c).ok);
        CHECK(operator_identity_failures(filled.h, filled.c).empty());
        CHECK(serialize_mmp(strip_unishared(filled.h)) == serialize_mmp(h));
        CHECK(is_isomorphic(strip_unishared(filled.h), base));
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("fill keeps full hyperedges untouched") {
    const auto* f = find_fixture("filled-10-5");
    auto h = f->hypergraph();
    auto filled = fill(h, f->coordinatization());
    CHECK(serialize_mmp(filled.h) == serialize_mmp(h));
}

TEST_CASE("fill rejects dependent vectors") {
    auto h = parse_mmp("12,23,31.");
    Coordinatization c;
    c.n = 3;
    c.vecs = {CVector{1, 0, 0}, CVector{2, 0, 0}, CVector{0, 1, 0}};
    CHECK_THROWS_AS(fill(h, c), Error);
}
