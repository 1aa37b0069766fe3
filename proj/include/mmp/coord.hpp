#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "mmp/hypergraph.hpp"

namespace mmp {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

struct Atom {
    cplx value;
    std::string symbol;
};

// Scalar tokens: [sign][coefficient][symbol] with symbol one of i, w, w2, r2,
// r3, r5, tau (w = exp(2 pi i/3), w2 = conj(w), tau = golden ratio). A leading
// "±" in a component list expands to both signs.
cplx parse_scalar(std::string_view token);

struct ComponentSet {
    std::vector<Atom> atoms;
    double eps = 1e-10;
};

ComponentSet parse_components(std::string_view list);

// Vertex-indexed vectors; symbols keeps the written tokens when known.
struct Coordinatization {
    int n = 0;
    std::vector<CVector> vecs;
    std::vector<std::vector<std::string>> symbols;
};

// Map label -> token list, in the hypergraph's vertex order.
Coordinatization make_coordinatization(const Hypergraph& h,
                                       const std::vector<std::pair<std::string, std::vector<std::string>>>& entries);

cplx inner(const CVector& a, const CVector& b);  // conjugate-linear in a
double norm(const CVector& v);
bool orthogonal(const CVector& a, const CVector& b, double eps = 1e-10);

// Divides by the first entry of largest modulus so that entry becomes 1.
CVector canonical_vector(const CVector& v);
bool equivalent(const CVector& a, const CVector& b, double eps = 1e-9);

struct Violation3 {
    int edge, u, v;
};

struct VerifyResult {
    bool ok = true;
    std::vector<Violation3> violations;
};

VerifyResult verify_coordinatization(const Hypergraph& h, const Coordinatization& c, double eps = 1e-10);

// Every nonzero n-tuple over the atoms reduced to one representative per
// projective class, in odometer order (first occurrence kept).
std::vector<CVector> enumerate_vectors(const ComponentSet& cs, int n, std::uint64_t limit = kUnlimited,
                                       std::vector<std::vector<int>>* atom_index = nullptr);

struct Master {
    Hypergraph h;
    Coordinatization c;
};

// All orthogonal n-bases over the enumerated vectors.
Master generate_master(const ComponentSet& cs, int n, std::uint64_t limit = kUnlimited);

struct VecfindResult {
    bool found = false;
    bool complete = false;  // search space exhausted
    Coordinatization c;
    std::uint64_t nodes = 0;
};

VecfindResult vecfind(const Hypergraph& h, const ComponentSet& cs, std::uint64_t node_limit = kUnlimited,
                      std::uint64_t seed = 0);

struct Filled {
    Hypergraph h;
    Coordinatization c;
};

// Completes every hyperedge to an orthonormal basis with fresh vertices.
Filled fill(const Hypergraph& h, const Coordinatization& c);

// Products of O_v = 2 v v^dagger / <v,v> - I over each full hyperedge compared
// with (-1)^(n-1) I. Returns indices of failing hyperedges.
std::vector<int> operator_identity_failures(const Hypergraph& h, const Coordinatization& c, double tol = 1e-9);

// Max over s in {+1,-1}^k of sum_e sigma * prod_{v in e} s_v with sigma = -1
// for even n and +1 for odd n; requires k <= 30.
int classical_operator_max(const Hypergraph& h);

}  // namespace mmp
