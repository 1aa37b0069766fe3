#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mmp/assign.hpp"
#include "mmp/hypergraph.hpp"

namespace mmp {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Sum over hyperedges of the within-edge probabilities 1/|e|; always l.
Rational quantum_index(const Hypergraph& h);
// Per-vertex share: sum over the hyperedges of v of 1/|e|.
std::vector<Rational> quantum_vertex_terms(const Hypergraph& h);

// k/n when every hyperedge has declared_n vertices, else the sum over
// vertices of the mean of 1/|e| over the hyperedges containing the vertex.
Rational alpha_raw(const Hypergraph& h, int declared_n = 0);
Rational alpha_post(const Hypergraph& h);

struct LPResult {
    Rational value;
    std::vector<Rational> x;
};

// max sum x_v subject to sum_{v in e} x_v <= 1 and lo_v <= x_v <= hi_v.
// Empty bound vectors mean [0, 1].
LPResult lp_alpha_star(const Hypergraph& h, const std::vector<Rational>& lo = {},
                       const std::vector<Rational>& hi = {});

struct Verdict {
    std::string name;
    std::string lhs, rel, rhs;
    bool satisfied = false;
};

struct InequalityReport {
    Rational HI_q, alpha_r, alpha_p, alpha_star_free;
    int alpha = 0;
    std::vector<Verdict> verdicts;  // v, e_Max, e_min, alpha_r, alpha_p, GLS
    bool contextual = false;
};

InequalityReport evaluate(const Hypergraph& h, const IndexReport& idx, bool binary);

}  // namespace mmp
