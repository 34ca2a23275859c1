#pragma once

#include "cx/simplicial.hpp"
#include "dg/bar.hpp"
#include "dg/cyclic_power.hpp"

namespace tatehh {

// cyclic bar object Z(A; M): level k is M (x) Abar^k (reduced mode) with the
// wrap-around last face, or M (x) A^k with degeneracies (full mode)
struct CyclicBarObject {
    SimplicialObject object;
    std::vector<TupleBasis> bases;
    bool reduced = true;
    std::vector<uint32_t> alg_index;
    DgAlgebra algebra;
    DgBimodule module;
    int truncation = 0;
};

CyclicBarObject cyclic_bar(const DgAlgebra& a, const DgBimodule& m, int L, bool reduced = true);

// Hochschild homology dims through degree D, with the stabilization check
// (recompute at truncation D+2 and compare)
struct HochschildResult {
    std::map<int, size_t> dims; // degrees 0..D
    bool stabilized = false;
    int max_degree = 0;
    Realization realization; // at truncation D+1
};
HochschildResult hh(const DgAlgebra& a, const DgBimodule& m, int D);

// chain complex with an automorphism of finite order commuting with d
struct EquivariantComplex {
    ChainComplex complex;
    std::map<int, FpMat> action;
    size_t order = 1;

    FpMat action_at(int n) const;
};
EquivariantComplex make_equivariant(ChainComplex c, std::map<int, FpMat> action, size_t order,
                                    bool verify = true);
EquivariantComplex equivariant_direct_sum(const EquivariantComplex& a,
                                          const EquivariantComplex& b);
// quotient good truncation at `top`: degrees above `top` dropped, degree top
// replaced by C_top/ker(d_top); an equivariant quasi-isomorphism from the
// untruncated complex whenever its homology vanishes in degrees >= top
EquivariantComplex good_truncate(const EquivariantComplex& ec, int top);

struct HomologyModule {
    size_t dim = 0;
    FpMat reps;   // cycle representatives
    FpMat action; // induced action in the reps basis
};
HomologyModule homology_module(const EquivariantComplex& ec, int n);

// group cohomology dims of a C_p-module by the rank formulas:
// (dim ker N - rank(t-1), dim ker(t-1) - rank N) = (even spots, odd spots)
// in the periodic complete resolution with d_s = (t-1) for odd s, N for even s
std::pair<size_t, size_t> tate_cohomology_dims(const PrimeField& F, const FpMat& action,
                                               size_t order);

// p-fold unwinding of the cyclic bar object along the circle cover: levels
// (M (x) A^n)^{(x)p} with the block-rotation action; equals the edgewise
// subdivision of Z(A;M) whenever M = A
struct UnwoundObject {
    SimplicialObject object;
    std::vector<TupleBasis> bases;
    std::vector<ChainMap> action;
};
UnwoundObject unwind_cyclic_bar(const DgAlgebra& a, const DgBimodule& m, size_t p, int L);

struct SubdivisionResult {
    UnwoundObject unwound;       // full levels, with degeneracies and action
    CyclicBarObject power_bar;   // reduced Z(A^{(x)p}; M^tw)
    EquivariantComplex realized; // realization of power_bar with the rotation
    size_t p = 1;
};
// precondition: z.truncation >= p*(out_trunc+1) - 1
SubdivisionResult subdivide(const CyclicBarObject& z, size_t p, int out_trunc);

// just the realized equivariant complex of the subdivision model (skips the
// unwound object); action order, commutation with d verified
EquivariantComplex subdivided_realization(const DgAlgebra& a, const DgBimodule& m, size_t p,
                                          int trunc);

// the levelwise rotation action on the reduced cyclic bar of (A^{(x)p}, M^tw)
std::vector<ChainMap> power_bar_action(const CyclicBarObject& zbn, const CyclicPowerAlgebra& cp,
                                       const FpMat& module_twist);

struct ComparisonReport {
    struct Line {
        int level;
        std::string identity;
        bool ok;
    };
    std::vector<Line> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};
// levelwise identification of the unwinding with the cyclic bar of the
// twisted power: checks the interleaving map against all faces, degeneracies
// and both rotation actions
ComparisonReport compare_subdivision(const DgAlgebra& a, const DgBimodule& m, size_t p, int L);

} // namespace tatehh
