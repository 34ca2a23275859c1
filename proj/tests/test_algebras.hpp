#pragma once

// small algebras shared across test suites
#include "dg/algebra.hpp"
#include "dg/resolution.hpp"

namespace tatehh::testing {

inline DgAlgebra ground_field(uint32_t p) {
    DgAlgebra a(PrimeField(p), 1);
    a.name = "F" + std::to_string(p);
    a.labels = {"1"};
    a.unit = 0;
    a.mult[0][0] = {{0, 1}};
    return a;
}

// F_p[e]/(e^2), |e| = eps_degree, de = 0
inline DgAlgebra dual_numbers(uint32_t p, int eps_degree) {
    DgAlgebra a(PrimeField(p), 2);
    a.name = "F" + std::to_string(p) + "[e]";
    a.labels = {"1", "e"};
    a.degree = {0, eps_degree};
    a.unit = 0;
    a.mult[0][0] = {{0, 1}};
    a.mult[0][1] = {{1, 1}};
    a.mult[1][0] = {{1, 1}};
    a.mult[1][1] = {}; // e^2 = 0
    return a;
}

inline DgAlgebra product_of_fields(uint32_t p) {
    // F_p x F_p with basis 1, e (e = first idempotent), e^2 = e
    DgAlgebra a(PrimeField(p), 2);
    a.name = "F" + std::to_string(p) + "xF" + std::to_string(p);
    a.labels = {"1", "e"};
    a.unit = 0;
    a.mult[0][0] = {{0, 1}};
    a.mult[0][1] = {{1, 1}};
    a.mult[1][0] = {{1, 1}};
    a.mult[1][1] = {{1, 1}};
    return a;
}

// path algebra of the A_2 quiver: e1, e2, arrow r with r = e2 r e1
inline DgAlgebra a2_path(uint32_t p) {
    DgAlgebra a(PrimeField(p), 3);
    a.name = "A2path";
    a.labels = {"u", "v", "r"}; // u + v = 1 is NOT a basis element; use unit trick below
    // use basis {1, e, r} with e = e1 (so e2 = 1 - e), r = e2 r e1 = r:
    // e*e = e, r*e = r, e*r = 0, r*r = 0, r*1 = r
    a.labels = {"1", "e", "r"};
    a.unit = 0;
    a.mult[0][0] = {{0, 1}};
    a.mult[0][1] = {{1, 1}};
    a.mult[1][0] = {{1, 1}};
    a.mult[0][2] = {{2, 1}};
    a.mult[2][0] = {{2, 1}};
    a.mult[1][1] = {{1, 1}};
    a.mult[2][1] = {{2, 1}};          // r e = r  (r enters at vertex 1)
    a.mult[1][2] = {};                // e r = 0  (r leaves at vertex 2 = 1 - e)
    a.mult[2][2] = {};
    return a;
}

inline DgAlgebra matrix_algebra(uint32_t p) {
    // M_2(F_p), basis 1, E12, E21, E22 (E11 = 1 - E22)
    DgAlgebra a(PrimeField(p), 4);
    PrimeField F(p);
    a.name = "M2";
    a.labels = {"1", "a", "b", "w"}; // a = E12, b = E21, w = E22
    a.unit = 0;
    auto set = [&](size_t i, size_t j, SparseVec v) { a.mult[i][j] = std::move(v); };
    uint32_t minus = F.neg(1);
    for (size_t i = 0; i < 4; ++i) {
        set(0, i, {{static_cast<uint32_t>(i), 1}});
        if (i) set(i, 0, {{static_cast<uint32_t>(i), 1}});
    }
    // E12 E12 = 0; E12 E21 = E11 = 1 - w; E12 E22 = E12; E22 E12 = 0
    set(1, 1, {});
    set(1, 2, {{0, 1}, {3, minus}});
    set(1, 3, {{1, 1}});
    set(3, 1, {});
    // E21 E12 = E22; E21 E21 = 0; E21 E22 = 0; E22 E21 = E21
    set(2, 1, {{3, 1}});
    set(2, 2, {});
    set(2, 3, {});
    set(3, 2, {{2, 1}});
    // E22 E22 = E22
    set(3, 3, {{3, 1}});
    return a;
}

// acyclic DG algebra: basis 1, x (deg 0), y (deg 1); dy = x; x^2 = xy = yx = y^2 = 0
inline DgAlgebra acyclic_dg(uint32_t p) {
    DgAlgebra a(PrimeField(p), 3);
    a.name = "DGsq";
    a.labels = {"1", "x", "y"};
    a.degree = {0, 0, 1};
    a.unit = 0;
    a.mult[0][0] = {{0, 1}};
    a.mult[0][1] = {{1, 1}};
    a.mult[1][0] = {{1, 1}};
    a.mult[0][2] = {{2, 1}};
    a.mult[2][0] = {{2, 1}};
    a.mult[1][1] = {};
    a.mult[1][2] = {};
    a.mult[2][1] = {};
    a.mult[2][2] = {};
    a.diff.add_at(1, 2, 1); // dy = x
    return a;
}

// trivial one-dimensional bimodule over any augmented test algebra:
// every non-unit basis element acts by zero
inline DgBimodule trivial_module(const DgAlgebra& a) {
    DgBimodule m(a.F, 1, a.dim());
    m.name = "triv";
    m.labels = {"t"};
    m.left[a.unit] = FpMat::identity(a.F, 1);
    m.right[a.unit] = FpMat::identity(a.F, 1);
    return m;
}

// ---- certified resolutions ----

inline BimodResolutionData separable_resolution_product(uint32_t /*p*/) {
    // F_2 x F_2 (basis 1,e): separability idempotent e(x)e + (1-e)(x)(1-e)
    //   = 1(x)1 - 1(x)e - e(x)1 + 2 e(x)e; over F_2: 1(x)1 + 1(x)e + e(x)1
    // Section of the multiplication: s(1) = that element.
    BimodResolutionData d;
    d.rank = {1};
    d.idem.resize(1);
    // coordinates (slot=0, x, y) with dimA = 2: index x*2+y
    d.idem[0].gen_image = {{{0 * 2 + 0, 1}, {0 * 2 + 1, 1}, {1 * 2 + 0, 1}}};
    d.diff = {};
    d.aug = {{{0, 1}}};
    return d;
}

inline BimodResolutionData separable_resolution_m2(uint32_t p) {
    // M_2: s(1) = sum_i E_i1 (x) E_1i = E11(x)E11 + E21(x)E12
    // basis 1, a=E12, b=E21, w=E22; E11 = 1 - w
    // E11(x)E11 = (1-w)(x)(1-w) = 1(x)1 - 1(x)w - w(x)1 + w(x)w
    // E21(x)E12 = b(x)a
    PrimeField F(p);
    uint32_t minus = F.neg(1);
    BimodResolutionData d;
    d.rank = {1};
    d.idem.resize(1);
    auto c = [&](uint32_t x, uint32_t y) { return x * 4 + y; };
    d.idem[0].gen_image = {{{c(0, 0), 1},
                            {c(0, 3), minus},
                            {c(2, 1), 1},
                            {c(3, 0), minus},
                            {c(3, 3), 1}}};
    d.aug = {{{0, 1}}};
    return d;
}

inline BimodResolutionData hereditary_resolution_a2(uint32_t p) {
    // A_2 path algebra, basis 1, e, r (e = target vertex of nothing... e*r = 0, r*e = r):
    // vertices e1 = e, e2 = 1 - e. Components:
    //   W_0 = A e (x) e A  ⊕  A (1-e) (x) (1-e) A   (rank 2, idempotents e(x)e, (1-e)(x)(1-e))
    //   W_1 = A (1-e) (x) e A                        (rank 1, idempotent (1-e)(x)e)
    // d(gen) = r (x) e  -  (1-e) (x) r   (slot 0 resp. slot 1)
    PrimeField F(p);
    uint32_t minus = F.neg(1);
    BimodResolutionData d;
    d.rank = {2, 1};
    d.idem.resize(2);
    d.diff.resize(1);
    auto c = [&](uint32_t slot, uint32_t x, uint32_t y) { return slot * 9 + x * 3 + y; };
    // e (x) e at slot 0; (1-e)(x)(1-e) at slot 1
    d.idem[0].gen_image = {
        {{c(0, 1, 1), 1}},
        {{c(1, 0, 0), 1}, {c(1, 0, 1), minus}, {c(1, 1, 0), minus}, {c(1, 1, 1), 1}}};
    // (1-e) (x) e
    d.idem[1].gen_image = {{{c(0, 0, 1), 1}, {c(0, 1, 1), minus}}};
    // d(gen) = r(x)e at slot 0 - (1-e)(x)r at slot 1
    d.diff[0].gen_image = {{{c(0, 2, 1), 1}, {c(1, 0, 2), minus}, {c(1, 1, 2), 1}}};
    d.aug = {{{1, 1}}, {{0, 1}, {1, minus}}}; // gen0 -> e, gen1 -> 1 - e
    return d;
}

// W = [A^e] with the multiplication as augmentation: a resolution whenever
// multiplication is a quasi-isomorphism (the acyclic DG examples)
inline BimodResolutionData free_rank1_resolution() {
    BimodResolutionData d;
    d.rank = {1};
    d.idem.resize(1); // identity
    d.aug = {{{0, 1}}};
    return d;
}

inline BimodResolutionData ground_field_resolution() { return free_rank1_resolution(); }

} // namespace tatehh::testing
