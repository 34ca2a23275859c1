#pragma once

#include "cx/bicomplex.hpp"
#include "dg/algebra.hpp"

namespace tatehh {

// A finite complex of projective bimodules resolving A. Components are
// images of explicit idempotent endomorphisms of free bimodules (A (x) A)^r
// with degree-0 generators, so projectivity is certified by construction;
// the resolution property itself is verified against A at load time.
//
// Elements of (A (x) A)^r are sparse vectors over coordinates
// (slot, x, y) -> slot*dimA^2 + x*dimA + y.
struct FreeBimodMap {
    std::vector<SparseVec> gen_image; // one element of the target per source generator
};

struct BimodResolutionData {
    std::vector<size_t> rank;       // per homological degree 0..len
    std::vector<FreeBimodMap> idem; // e_q; identity when gen_image is empty
    std::vector<FreeBimodMap> diff; // d_q : q -> q-1, for q = 1..len
    std::vector<SparseVec> aug;     // per generator of degree 0: element of A
};

struct VerifiedResolution {
    BimodResolutionData data;
    std::vector<FpMat> ambient_idem; // per q, on rank[q]*dimA^2 coordinates
    std::vector<FpMat> ambient_diff; // per q >= 1
    FpMat aug_matrix;                // dimA x rank[0]*dimA^2
    int length = 0;
};

// expand, check shapes/gradings/idempotency/d^2/augmentation, and verify the
// homology is A (via the cone of the augmentation). Throws Error on failure.
VerifiedResolution verify_resolution(const DgAlgebra& a, const BimodResolutionData& data);

// H_*(X (x)_{A^e} W) — Hochschild homology of A with coefficients in X,
// exact in every degree, with a certified support bound.
struct TorResult {
    std::map<int, size_t> dims; // nonzero entries only
    int support_lo = 0, support_hi = 0;
};
TorResult hh_via_resolution(const DgAlgebra& a, const VerifiedResolution& w, const DgBimodule& x);

// finite bimodule model of M (x)^L_A N: the total complex of M (x)_A W (x)_A N
// with the outer bimodule structure (left action twisted by (-1)^{q|e|}
// against the folded total differential)
DgBimodule sandwich_bimodule(const DgAlgebra& a, const VerifiedResolution& w,
                             const DgBimodule& m, const DgBimodule& n);

} // namespace tatehh
