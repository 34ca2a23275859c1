#include <doctest.h>

#include "tate/tate.hpp"
#include "test_algebras.hpp"

using namespace tatehh;
using namespace tatehh::testing;

namespace {

// trivial one-dimensional module in the given degree
EquivariantComplex trivial_equivariant(uint32_t p, int degree) {
    PrimeField F(p);
    ChainComplex c = point_complex(F, degree);
    return make_equivariant(c, {}, p, true);
}

// the free module F_p[C_p] in degree 0 with the regular (cyclic) action
EquivariantComplex free_equivariant(uint32_t p) {
    PrimeField F(p);
    GradedSpace s(F);
    s.dims[0] = p;
    ChainComplex c(std::move(s), {});
    FpMat perm(F, p, p);
    for (size_t j = 0; j < p; ++j) perm.add_at((j + 1) % p, j, 1);
    std::map<int, FpMat> act;
    act.emplace(0, std::move(perm));
    return make_equivariant(std::move(c), std::move(act), p, true);
}

// acyclic equivariant complex: cone of the identity on F_p^2 with swapped
// coordinates as the action
EquivariantComplex acyclic_equivariant(uint32_t p) {
    PrimeField F(p);
    GradedSpace s(F);
    s.dims[0] = p;
    s.dims[1] = p;
    std::map<int, FpMat> diff;
    diff.emplace(1, FpMat::identity(F, p));
    ChainComplex c(std::move(s), std::move(diff));
    FpMat perm(F, p, p);
    for (size_t j = 0; j < p; ++j) perm.add_at((j + 1) % p, j, 1);
    std::map<int, FpMat> act;
    act.emplace(0, perm);
    act.emplace(1, perm);
    return make_equivariant(std::move(c), std::move(act), p, true);
}

} // namespace

TEST_CASE("complete resolution") {
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        GComplex w = standard_complete_resolution(F, p, -6, 6);
        verify_complete_resolution(w);
        // ranks alternate: rank(t-1) = p-1, rank(N) = 1
        FpMat perm(F, p, p);
        for (size_t j = 0; j < p; ++j) perm.add_at((j + 1) % p, j, 1);
        CHECK(induced_on_coinvariants(w.diff.at(1), perm, F, p).rank() == p - 1);
        CHECK(induced_on_coinvariants(w.diff.at(2), perm, F, p).rank() == 1);
    }
    // the cone model is also a complete resolution
    for (uint32_t p : {2u, 3u}) {
        GComplex cone = cone_resolution(PrimeField(p), p, -5, 5);
        verify_complete_resolution(cone);
    }
}

TEST_CASE("Tate homology of the trivial module") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto dims = tate_homology(trivial_equivariant(p, 0), -6, 6);
        for (int n = -6; n <= 6; ++n) CHECK(dims.at(n) == 1);
    }
    // a shifted trivial module: still one-dimensional everywhere
    auto dims5 = tate_homology(trivial_equivariant(2, 5), -3, 6);
    for (int n = -3; n <= 6; ++n) CHECK(dims5.at(n) == 1);
}

TEST_CASE("free modules have vanishing Tate homology") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto dims = tate_homology(free_equivariant(p), -5, 5);
        for (int n = -5; n <= 5; ++n) CHECK(dims.at(n) == 0);
    }
}

TEST_CASE("free summands are invisible") {
    auto sum = equivariant_direct_sum(trivial_equivariant(2, 0), free_equivariant(2));
    auto dims = tate_homology(sum, -4, 4);
    for (int n = -4; n <= 4; ++n) CHECK(dims.at(n) == 1);
}

TEST_CASE("quasi-isomorphism invariance") {
    for (uint32_t p : {2u, 3u}) {
        auto ac = acyclic_equivariant(p);
        auto z = tate_homology(ac, -3, 3);
        for (int n = -3; n <= 3; ++n) CHECK(z.at(n) == 0);
        auto sum = equivariant_direct_sum(trivial_equivariant(p, 0), ac);
        auto base = tate_homology(trivial_equivariant(p, 0), -3, 3);
        auto dims = tate_homology(sum, -3, 3);
        for (int n = -3; n <= 3; ++n) CHECK(dims.at(n) == base.at(n));
    }
}

TEST_CASE("variants agree for bounded coefficients") {
    for (uint32_t p : {2u, 3u}) {
        auto m = equivariant_direct_sum(trivial_equivariant(p, 0), free_equivariant(p));
        auto t1 = tate_complex(m, TotalConvention::Sum, -4, 4);
        auto t2 = tate_complex(m, TotalConvention::Prod, -4, 4);
        auto t3 = tate_complex(m, TotalConvention::TateMixed, -4, 4);
        CHECK(t1.total.complex.same_dims(t2.total.complex));
        CHECK(t1.total.complex.same_dims(t3.total.complex));
        auto sup = t1.total.complex.support();
        REQUIRE(sup.has_value());
        for (int n = sup->first; n <= sup->second; ++n) {
            CHECK(t1.total.complex.d(n) == t2.total.complex.d(n));
            CHECK(t1.total.complex.d(n) == t3.total.complex.d(n));
        }
    }
}

TEST_CASE("periodicity certificate") {
    auto m = trivial_equivariant(2, 0);
    auto tc = tate_complex(m, TotalConvention::TateMixed, -5, 5);
    CHECK(tc.period == 1);
    verify_periodicity(tc);

    auto m3 = trivial_equivariant(3, 0);
    auto tc3 = tate_complex(m3, TotalConvention::TateMixed, -5, 5);
    CHECK(tc3.period == 2);
    verify_periodicity(tc3);
}

TEST_CASE("orbits, fixed points, transfer") {
    // trivial module, p = 2: group homology in degrees >= 0, cohomology <= 0
    auto m = trivial_equivariant(2, 0);
    auto oft = orbits_fixed_transfer(m, -6, 6);
    for (int n = 0; n <= 5; ++n) CHECK(homology_dim(oft.orbits.total.complex, n) == 1);
    CHECK(homology_dim(oft.orbits.total.complex, -1) == 0);
    for (int n = -5; n <= 0; ++n) CHECK(homology_dim(oft.fixed.total.complex, n) == 1);
    CHECK(homology_dim(oft.fixed.total.complex, 1) == 0);

    // free module: transfer induces an isomorphism on interior homology
    auto fr = free_equivariant(3);
    auto oft2 = orbits_fixed_transfer(fr, -6, 6);
    // orbits of a free module: F_p in degree 0 only
    CHECK(homology_dim(oft2.orbits.total.complex, 0) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(homology_dim(oft2.orbits.total.complex, n) == 0);
    CHECK(homology_dim(oft2.fixed.total.complex, 0) == 1);
    // cone of the transfer is acyclic on the interior (Tate of free = 0)
    ChainComplex cn = cone(oft2.transfer).cone;
    for (int n = -4; n <= 4; ++n) CHECK(homology_dim(cn, n) == 0);
}

TEST_CASE("cone of the transfer matches the Tate complex") {
    for (uint32_t p : {2u, 3u}) {
        for (int variant = 0; variant < 2; ++variant) {
            EquivariantComplex m =
                variant == 0 ? trivial_equivariant(p, 0)
                             : equivariant_direct_sum(trivial_equivariant(p, 1),
                                                      free_equivariant(p));
            auto oft = orbits_fixed_transfer(m, -7, 7);
            ChainComplex cn = cone(oft.transfer).cone;
            auto dims = tate_homology(m, -4, 4);
            for (int n = -4; n <= 4; ++n) CHECK(homology_dim(cn, n) == dims.at(n));
        }
    }
}

TEST_CASE("cone model of the complete resolution agrees") {
    for (uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        GComplex cone_w = cone_resolution(F, p, -7, 7);
        for (int variant = 0; variant < 2; ++variant) {
            EquivariantComplex m = variant == 0
                                       ? trivial_equivariant(p, 0)
                                       : equivariant_direct_sum(trivial_equivariant(p, 0),
                                                                free_equivariant(p));
            auto via_cone = tensor_over_group(cone_w, m, TotalConvention::Sum);
            auto via_std = tate_complex(m, TotalConvention::Sum, -7, 7);
            for (int n = -4; n <= 4; ++n)
                CHECK(homology_dim(via_cone.total.complex, n) ==
                      homology_dim(via_std.total.complex, n));
        }
    }
}

TEST_CASE("split short exact sequences add up") {
    // degreewise-split SES = direct sum in dims: Tate complexes add
    auto a = trivial_equivariant(2, 0);
    auto b = free_equivariant(2);
    auto sum = equivariant_direct_sum(a, b);
    auto ta = tate_complex(a, TotalConvention::Sum, -4, 4);
    auto tb = tate_complex(b, TotalConvention::Sum, -4, 4);
    auto ts = tate_complex(sum, TotalConvention::Sum, -4, 4);
    auto sup = ts.total.complex.support();
    REQUIRE(sup.has_value());
    for (int n = sup->first; n <= sup->second; ++n)
        CHECK(ts.total.complex.dim(n) ==
              ta.total.complex.dim(n) + tb.total.complex.dim(n));
}

TEST_CASE("exactness triangle Euler form") {
    // alternating-sum consistency of fixed/orbits/Tate homology dims over the
    // safe window for the subdivided dual-numbers model
    DgAlgebra alg = dual_numbers(2, 0);
    CyclicBarObject z = cyclic_bar(alg, bimodule_from_algebra(alg), 7, true);
    auto sd = subdivide(z, 2, 3);
    EquivariantComplex m = good_truncate(sd.realized, 3);

    auto oft = orbits_fixed_transfer(m, -8, 8);
    ChainComplex cn = cone(oft.transfer).cone;
    auto tate = tate_homology(m, -2, 2);
    for (int n = -2; n <= 2; ++n) CHECK(homology_dim(cn, n) == tate.at(n));
}

TEST_CASE("margin violation is reported") {
    auto m = trivial_equivariant(2, 0);
    CHECK_NOTHROW(tate_homology(m, -2, 2));
    // empty range
    CHECK_THROWS_AS(tate_homology(m, 2, -2), Error);
}
