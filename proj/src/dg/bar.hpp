#pragma once

#include "cx/simplicial.hpp"
#include "dg/algebra.hpp"
#include "dg/tuple_basis.hpp"

namespace tatehh {

// chain complex of a flat-indexed graded module (basis regrouped by degree,
// original order preserved within each degree)
ChainComplex complex_from_flat(PrimeField F, const std::vector<int>& degrees, const FpMat& diff,
                               const std::vector<std::string>& labels = {});

// Two-sided bar construction B(M, A, N). Levels are M (x) Abar^k (x) N in
// reduced mode (Abar = A with the unit basis vector removed, inner face
// products projected away from the unit) and M (x) A^k (x) N with
// degeneracies in full mode.
struct BarObject {
    SimplicialObject object;
    std::vector<TupleBasis> bases;
    bool reduced;
    std::vector<uint32_t> alg_index; // algebra-slot index -> A basis index
};

BarObject two_sided_bar(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n, int L,
                        bool reduced = true);

// augmentation B(A, A, N) -> N (collapse level 0 by the left action)
ChainMap bar_augmentation(const Realization& realized_bar, const BarObject& bar,
                          const DgAlgebra& a, const DgBimodule& n);

// M (x)^L_A N through homological degree D (bar truncation at L = D+1)
struct DerivedTensor {
    Realization realization;
    std::map<int, size_t> tor_dims; // degrees 0..D
    int max_degree;
};
DerivedTensor derived_tensor(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n, int D);

// the realization of the reduced bar complex as a DG bimodule: A acts on the
// outer M and N slots (right action picks up the Koszul sign past the other
// factors). Models M (x)^L_A N as a bimodule, truncated at level L.
DgBimodule realized_bar_bimodule(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n,
                                 int L);

} // namespace tatehh
