#include <doctest.h>

#include "cx/bicomplex.hpp"
#include "cx/chain.hpp"
#include "cx/simplicial.hpp"

#include <random>

using namespace tatehh;

namespace {

ChainComplex two_term(PrimeField F, int top_degree, const FpMat& d) {
    GradedSpace s(F);
    s.dims[top_degree] = d.cols();
    s.dims[top_degree - 1] = d.rows();
    std::map<int, FpMat> diff;
    diff.emplace(top_degree, d);
    return ChainComplex(std::move(s), std::move(diff));
}

// random complex via cone / tensor / shift / sum closure over point complexes
ChainComplex random_complex(PrimeField F, std::mt19937& rng, int depth = 3) {
    if (depth == 0) return point_complex(F, static_cast<int>(rng() % 3));
    switch (rng() % 4) {
        case 0: {
            ChainComplex c = random_complex(F, rng, depth - 1);
            return cone(ChainMap::identity(c)).cone;
        }
        case 1: {
            ChainComplex a = random_complex(F, rng, depth - 1);
            ChainComplex b = random_complex(F, rng, depth - 1);
            if (a.total_dim() * b.total_dim() > 4096) return direct_sum(a, b);
            return tensor(a, b);
        }
        case 2:
            return shift(random_complex(F, rng, depth - 1), static_cast<int>(rng() % 3) - 1);
        default: {
            ChainComplex a = random_complex(F, rng, depth - 1);
            ChainComplex b = random_complex(F, rng, depth - 1);
            return direct_sum(a, b);
        }
    }
}

} // namespace

TEST_CASE("homology basics") {
    PrimeField F2(2), F3(3);

    // isomorphism differential: acyclic
    auto iso = two_term(F2, 1, FpMat::from_rows(F2, {{1}}));
    CHECK(homology_dim(iso, 0) == 0);
    CHECK(homology_dim(iso, 1) == 0);

    // zero differential: homology equals dims
    GradedSpace s(F3);
    s.dims[0] = 2;
    s.dims[1] = 3;
    ChainComplex z(std::move(s), {});
    CHECK(homology_dim(z, 0) == 2);
    CHECK(homology_dim(z, 1) == 3);

    // zero map written as a matrix
    auto k = two_term(F3, 1, FpMat(F3, 1, 1));
    CHECK(homology_dim(k, 0) == 1);
    CHECK(homology_dim(k, 1) == 1);

    // degrees outside support
    CHECK(homology_dim(k, 17) == 0);
}

TEST_CASE("constructor enforces d^2 = 0 and shapes") {
    PrimeField F2(2);
    GradedSpace s(F2);
    s.dims[0] = 1;
    s.dims[1] = 1;
    s.dims[2] = 1;
    std::map<int, FpMat> diff;
    diff.emplace(1, FpMat::from_rows(F2, {{1}}));
    diff.emplace(2, FpMat::from_rows(F2, {{1}}));
    CHECK_THROWS_AS(ChainComplex(s, diff), Error);

    std::map<int, FpMat> bad;
    bad.emplace(1, FpMat(F2, 3, 1));
    CHECK_THROWS_AS(ChainComplex(s, bad), Error);
}

TEST_CASE("cone") {
    PrimeField F2(2);
    auto pt = point_complex(F2, 0);

    auto c1 = cone(ChainMap::identity(pt));
    CHECK(homology_dims(c1.cone).empty() == false);
    for (const auto& [n, d] : homology_dims(c1.cone)) CHECK(d == 0);
    CHECK(c1.cone.dim(0) == 1);
    CHECK(c1.cone.dim(1) == 1);

    auto c0 = cone(ChainMap::zero(pt, shift(pt, 1)));
    CHECK(c0.cone.dim(1) == 2); // target_1 + source_0

    // f: F_2 -> F_2 identity in degree 0, presented as a nonzero matrix
    std::map<int, FpMat> comp;
    comp.emplace(0, FpMat::from_rows(F2, {{1}}));
    auto cf = cone(ChainMap(pt, pt, std::move(comp)));
    CHECK(cf.cone.dim(0) == 1);
    CHECK(cf.cone.dim(1) == 1);
    CHECK(homology_dim(cf.cone, 0) == 0);
    CHECK(homology_dim(cf.cone, 1) == 0);
}

TEST_CASE("tensor") {
    PrimeField F3(3);
    auto unit = point_complex(F3, 0);
    std::mt19937 rng(5);
    auto c = random_complex(F3, rng);
    auto u = tensor(unit, c);
    CHECK(u.same_dims(c));

    // dims convolve
    auto band = cone(ChainMap::identity(point_complex(F3, 0))).cone; // dims 1,1 in degrees 0,1
    auto sq = tensor(band, band);
    CHECK(sq.dim(0) == 1);
    CHECK(sq.dim(1) == 2);
    CHECK(sq.dim(2) == 1);

    // Koszul sign: for |a| = 1 the second summand of d(a⊗b) carries -1 = 2 mod 3
    auto a = point_complex(F3, 1);
    auto b = cone(ChainMap::identity(point_complex(F3, 0))).cone; // d_b(1) = [1]
    auto t = tensor(a, b);
    // t_2 = a_1 ⊗ b_1 -> t_1 = a_1 ⊗ b_0; the only entry is -1
    CHECK(t.d(2).at(0, 0) == 2);
}

TEST_CASE("dual") {
    PrimeField F2(2);
    auto p3 = point_complex(F2, 3);
    auto d3 = dual(p3);
    CHECK(d3.dim(-3) == 1);
    CHECK(d3.total_dim() == 1);

    std::mt19937 rng(9);
    for (int t = 0; t < 5; ++t) {
        auto c = random_complex(F2, rng);
        CHECK(dual(dual(c)).same_dims(c));
    }

    auto ac = cone(ChainMap::identity(random_complex(F2, rng))).cone;
    auto dac = dual(ac);
    for (const auto& [n, d] : homology_dims(dac)) CHECK(d == 0);
}

TEST_CASE("Euler characteristic is preserved by homology") {
    std::mt19937 rng(21);
    for (uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (int t = 0; t < 8; ++t) {
            auto c = random_complex(F, rng);
            long long chi_dims = 0, chi_h = 0;
            auto sup = c.support();
            if (!sup) continue;
            for (int n = sup->first; n <= sup->second; ++n) {
                long long sgn = (n % 2 == 0) ? 1 : -1;
                chi_dims += sgn * static_cast<long long>(c.dim(n));
                chi_h += sgn * static_cast<long long>(homology_dim(c, n));
            }
            CHECK(chi_dims == chi_h);
        }
    }
}

TEST_CASE("Kunneth equality over a field") {
    std::mt19937 rng(33);
    for (uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (int t = 0; t < 6; ++t) {
            auto a = random_complex(F, rng, 2);
            auto b = random_complex(F, rng, 2);
            if (a.total_dim() * b.total_dim() > 2048) continue;
            auto ab = tensor(a, b);
            auto ha = homology_dims(a), hb = homology_dims(b);
            auto sup = ab.support();
            if (!sup) continue;
            for (int n = sup->first; n <= sup->second; ++n) {
                size_t expect = 0;
                for (const auto& [i, di] : ha) {
                    auto it = hb.find(n - i);
                    if (it != hb.end()) expect += di * it->second;
                }
                CHECK(homology_dim(ab, n) == expect);
            }
        }
    }
}

TEST_CASE("homology representatives") {
    PrimeField F2(2);
    std::mt19937 rng(41);
    auto c = random_complex(F2, rng);
    auto sup = c.support();
    REQUIRE(sup.has_value());
    for (int n = sup->first; n <= sup->second; ++n) {
        auto h = homology(c, n);
        CHECK(h.dim == homology_dim(c, n));
        // representatives are cycles
        for (size_t j = 0; j < h.reps.cols(); ++j) {
            std::vector<uint32_t> v(c.dim(n), 0);
            for (const auto& [i, val] : h.reps.col(j)) v[i] = val;
            for (uint32_t x : c.d(n).apply(v)) CHECK(x == 0);
            auto coords = homology_coordinates(c, n, h.reps, v);
            REQUIRE(coords.has_value());
            for (size_t i = 0; i < coords->size(); ++i) CHECK((*coords)[i] == (i == j ? 1u : 0u));
        }
    }
}

TEST_CASE("totalize conventions") {
    PrimeField F2(2);

    // single cell
    std::map<Bicomplex::Key, size_t> dims{{{0, 0}, 1}};
    Bicomplex one(F2, dims, {}, {});
    for (auto conv : {TotalConvention::Sum, TotalConvention::Prod, TotalConvention::TateMixed}) {
        auto t = totalize(one, conv, -1, 1);
        CHECK(t.complex.dim(0) == 1);
        CHECK(t.complex.total_dim() == 1);
    }

    // vertical strip equals the vertical complex
    std::map<Bicomplex::Key, size_t> strip{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}};
    std::map<Bicomplex::Key, FpMat> dv;
    dv.emplace(Bicomplex::Key{0, 1}, FpMat::from_rows(F2, {{1, 1}}));
    dv.emplace(Bicomplex::Key{0, 2}, FpMat::from_rows(F2, {{1}, {1}}));
    Bicomplex vert(F2, strip, {}, dv);
    auto t = totalize(vert, TotalConvention::Sum, 0, 2);
    CHECK(t.complex.dim(0) == 1);
    CHECK(t.complex.dim(1) == 2);
    CHECK(t.complex.dim(2) == 1);
    CHECK(t.complex.d(1) == FpMat::from_rows(F2, {{1, 1}}));

    // all three conventions agree degreewise for bounded support
    std::mt19937 rng(55);
    std::map<Bicomplex::Key, size_t> rect;
    for (int s = 0; s < 3; ++s)
        for (int tt = 0; tt < 2; ++tt) rect[{s, tt}] = 1 + rng() % 2;
    Bicomplex rectb(F2, rect, {}, {});
    auto t1 = totalize(rectb, TotalConvention::Sum, -1, 5);
    auto t2 = totalize(rectb, TotalConvention::Prod, -1, 5);
    auto t3 = totalize(rectb, TotalConvention::TateMixed, -1, 5);
    CHECK(t1.complex.same_dims(t2.complex));
    CHECK(t1.complex.same_dims(t3.complex));

    // declared-unbounded without certificate: Sum refuses
    Bicomplex ub(F2, rect, {}, {});
    ub.declare_unbounded_s(std::nullopt);
    CHECK_THROWS_AS(totalize(ub, TotalConvention::Sum, 0, 3), Error);
    ub.declare_unbounded_s(2);
    CHECK_NOTHROW(totalize(ub, TotalConvention::Sum, 0, 3));
}

TEST_CASE("realize") {
    PrimeField F2(2);

    // constant simplicial object: degeneracies kill levels >= 1
    int L = 3;
    SimplicialObject con;
    con.truncation = L;
    for (int k = 0; k <= L; ++k) con.level.push_back(point_complex(F2, 0));
    con.face.resize(L + 1);
    con.degeneracy.resize(L);
    for (int k = 1; k <= L; ++k)
        for (int i = 0; i <= k; ++i) con.face[k].push_back(ChainMap::identity(con.level[0]));
    for (int k = 0; k < L; ++k)
        for (int i = 0; i <= k; ++i) con.degeneracy[k].push_back(ChainMap::identity(con.level[0]));
    verify_simplicial_identities(con);
    auto r = realize(con);
    CHECK(r.total.complex.total_dim() == 1);
    CHECK(r.total.complex.dim(0) == 1);
    CHECK(r.provenance.find("truncated at 3") != std::string::npos);

    // L = 0: realization is the level-0 complex
    SimplicialObject l0;
    l0.truncation = 0;
    l0.level.push_back(point_complex(F2, 2));
    l0.face.resize(1);
    auto r0 = realize(l0);
    CHECK(r0.total.complex.dim(2) == 1);

    // two-level semisimplicial object with equal faces: alternating sum cancels mod 2
    SimplicialObject two;
    two.truncation = 1;
    two.level.push_back(point_complex(F2, 0));
    two.level.push_back(point_complex(F2, 0));
    two.face.resize(2);
    std::map<int, FpMat> id0;
    id0.emplace(0, FpMat::from_rows(F2, {{1}}));
    two.face[1].push_back(ChainMap(two.level[1], two.level[0], id0));
    two.face[1].push_back(ChainMap(two.level[1], two.level[0], id0));
    auto r2 = realize(two);
    CHECK(r2.total.complex.d(1).is_zero());
    CHECK(homology_dim(r2.total.complex, 0) == 1);
    CHECK(homology_dim(r2.total.complex, 1) == 1);
}

TEST_CASE("simplicial identity violations are reported") {
    PrimeField F2(2);
    SimplicialObject bad;
    bad.truncation = 2;
    GradedSpace s(F2);
    s.dims[0] = 2;
    for (int k = 0; k <= 2; ++k) bad.level.push_back(ChainComplex(GradedSpace(s), {}));
    bad.face.resize(3);
    FpMat swap_m = FpMat::from_rows(F2, {{0, 1}, {1, 0}});
    FpMat id_m = FpMat::identity(F2, 2);
    auto mk = [&](const FpMat& m, int k) {
        std::map<int, FpMat> comp;
        comp.emplace(0, m);
        return ChainMap(bad.level[k], bad.level[k - 1], std::move(comp));
    };
    bad.face[1] = {mk(id_m, 1), mk(id_m, 1)};
    bad.face[2] = {mk(swap_m, 2), mk(id_m, 2), mk(id_m, 2)};
    // d_0 d_1 = d_0 d_0 requires swap = id: fails
    CHECK_THROWS_WITH_AS(verify_simplicial_identities(bad),
                         doctest::Contains("face-face"), Error);
}
