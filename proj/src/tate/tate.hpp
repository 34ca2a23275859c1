#pragma once

#include "hh/hochschild.hpp"

namespace tatehh {

// Complex of free rank-one F_p[C_p]-modules on a degree window, with the
// differential given by a group-ring element per degree (coefficients of
// 1, t, ..., t^{p-1}). The standard complete resolution alternates
// d_s = (t - 1) for s odd and the norm N = 1 + t + ... + t^{p-1} for s even.
struct GComplex {
    PrimeField F;
    size_t p = 2;
    int lo = 0, hi = 0;
    std::map<int, std::vector<uint32_t>> diff; // d_s : degree s -> s-1

    bool has(int s) const { return s >= lo && s <= hi; }
};

GComplex standard_complete_resolution(PrimeField F, size_t p, int lo, int hi);
// positive half (degrees [0, hi]): the usual periodic resolution of F_p
GComplex positive_half(PrimeField F, size_t p, int hi);
// dual of the positive half on degrees [lo, 0]
GComplex dual_half(PrimeField F, size_t p, int lo);
// cone of the transfer E -> E^dual through degree zero, on [lo, hi]
GComplex cone_resolution(PrimeField F, size_t p, int lo, int hi);

// d^2 = 0 and exactness of W (x)_G F_p[C_p] on the window interior
void verify_complete_resolution(const GComplex& w);

// group-ring element acting on coinvariant coordinates: g = sum c_j t^j
// induces sum c_j T^{-j}
FpMat induced_on_coinvariants(const std::vector<uint32_t>& elt, const FpMat& action,
                              const PrimeField& F, size_t p);

// W (x)_G C totalized on the window of W-degrees, with filtration metadata
struct TateComplexData {
    TotalComplex total; // blocks: s = W-degree, t = coefficient degree
    int s_lo = 0, s_hi = 0;
    size_t p = 2;
    size_t period = 1;
    int safe_lo = 0, safe_hi = 0; // total degrees free of window edge effects
    EquivariantComplex coefficients;
};

TateComplexData tate_complex(const EquivariantComplex& m, TotalConvention conv, int s_lo,
                             int s_hi);
// same complex built from an arbitrary G-complex (used for the cone model)
TateComplexData tensor_over_group(const GComplex& w, const EquivariantComplex& m,
                                  TotalConvention conv);

// the periodicity chain isomorphism T_n -> T_{n+period}: verified to commute
// with the differential and to induce isomorphisms on homology in the safe
// range; throws on failure
void verify_periodicity(const TateComplexData& tc);

// homology of the Tate complex over [deg_lo, deg_hi] (window chosen with
// margin 2 automatically); asserts the periodicity
std::map<int, size_t> tate_homology(const EquivariantComplex& m, int deg_lo, int deg_hi);

struct OrbitsFixedTransfer {
    TateComplexData orbits; // E (x)_G C, W-degrees >= 0
    TateComplexData fixed;  // E^dual (x)_G C, W-degrees <= 0
    ChainMap transfer;      // orbits -> fixed, the norm through degree 0
};
OrbitsFixedTransfer orbits_fixed_transfer(const EquivariantComplex& m, int s_lo, int s_hi);

} // namespace tatehh
