#pragma once

#include "cx/bicomplex.hpp"
#include "cx/chain.hpp"

#include <string>
#include <vector>

namespace tatehh {

// Truncated simplicial object in chain complexes. Levels 0..truncation;
// face[k][i] : level k -> level k-1 for 0 <= i <= k. Degeneracies are
// optional: objects whose levels are already degenerate-collapsed (reduced
// bar constructions) carry faces only.
struct SimplicialObject {
    std::vector<ChainComplex> level;
    std::vector<std::vector<ChainMap>> face;       // face[k] for k >= 1
    std::vector<std::vector<ChainMap>> degeneracy; // degeneracy[k]: level k -> k+1; may be empty
    int truncation = 0;
    std::string provenance;

    bool has_degeneracies() const { return !degeneracy.empty(); }
};

// check the simplicial identities on all recorded maps; levels whose
// dimension exceeds dim_cap are skipped. Throws Error naming the identity.
void verify_simplicial_identities(const SimplicialObject& s, size_t dim_cap = SIZE_MAX);

// quotient by the degenerate subcomplexes; the result is face-only
struct NormalizedObject {
    SimplicialObject reduced;
    // per level, per internal degree: inclusion (reduced -> full) and
    // projection (full -> reduced) along the degenerate subspace
    std::vector<std::map<int, FpMat>> incl, proj;
};
NormalizedObject normalize(const SimplicialObject& s);

// total complex of the (normalized) simplicial object: horizontal
// differential is the alternating face sum; block s = simplicial level,
// block t = internal degree
struct Realization {
    TotalComplex total;
    int truncation;
    std::string provenance; // records the truncation
};
Realization realize(const SimplicialObject& s);

// assemble the degreewise matrix of a levelwise operator on the realization;
// ops[k] maps level k to level k (degreewise)
FpMat realized_levelwise_map(const Realization& r, const std::vector<ChainMap>& ops, int n);

} // namespace tatehh
