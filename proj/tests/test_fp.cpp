#include <doctest.h>

#include "fp/matrix.hpp"
#include "fp/prime_field.hpp"

#include <random>
#include <stdexcept>

using namespace tatehh;

namespace {

FpMat random_matrix(PrimeField F, size_t r, size_t c, std::mt19937& rng) {
    FpMat m(F, r, c);
    std::uniform_int_distribution<uint32_t> dist(0, F.modulus() - 1);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.add_at(i, j, dist(rng));
    return m;
}

// enumerate all of F_p^n and count vectors killed by m
size_t kernel_size_by_enumeration(const FpMat& m) {
    const PrimeField& F = m.field();
    size_t n = m.cols(), count = 0;
    std::vector<uint32_t> v(n, 0);
    while (true) {
        auto img = m.apply(v);
        bool zero = true;
        for (uint32_t x : img) zero &= (x == 0);
        if (zero) ++count;
        size_t k = 0;
        while (k < n && v[k] + 1 == F.modulus()) v[k++] = 0;
        if (k == n) break;
        ++v[k];
    }
    return count;
}

} // namespace

TEST_CASE("prime field basics") {
    CHECK_THROWS(PrimeField(4));
    CHECK_THROWS(PrimeField(1));
    CHECK_THROWS(PrimeField(0));
    for (uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
        PrimeField F(p);
        for (uint32_t a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.sign(0) == 1);
        CHECK(F.sign(1) == F.neg(1));
        CHECK(F.reduce(-1) == p - 1);
    }
}

TEST_CASE("rref examples") {
    PrimeField F2(2), F3(3), F5(5);

    auto m = FpMat::from_rows(F2, {{1, 1}, {1, 1}});
    auto r = m.rref();
    CHECK(r.mat == FpMat::from_rows(F2, {{1, 1}, {0, 0}}));
    CHECK(r.pivots == std::vector<size_t>{0});
    CHECK(m.rank() == 1);

    auto id = FpMat::identity(F5, 3);
    auto ri = id.rref();
    CHECK(ri.mat == id);
    CHECK(ri.pivots == std::vector<size_t>{0, 1, 2});

    // row2 = 2 * row1 mod 3
    auto m3 = FpMat::from_rows(F3, {{1, 2}, {2, 4}});
    auto r3 = m3.rref();
    CHECK(r3.mat == FpMat::from_rows(F3, {{1, 2}, {0, 0}}));
    CHECK(r3.pivots == std::vector<size_t>{0});
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(F, 4, 5, rng);
            auto r1 = m.rref();
            auto r2 = r1.mat.rref();
            CHECK(r1.mat == r2.mat);
            CHECK(r1.pivots == r2.pivots);
        }
    }
}

TEST_CASE("kernel examples") {
    PrimeField F2(2), F3(3);

    CHECK(FpMat(F2, 2, 2).kernel_basis().cols() == 2);
    CHECK(FpMat::identity(F3, 4).kernel_basis().cols() == 0);

    auto m = FpMat::from_rows(F2, {{1, 1}});
    auto k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
    // exhaustive: of the 4 vectors in F_2^2 exactly (0,0) and (1,1) die
    CHECK(kernel_size_by_enumeration(m) == 2);
}

TEST_CASE("rank-nullity against exhaustive enumeration") {
    std::mt19937 rng(11);
    for (uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        std::uniform_int_distribution<size_t> dims(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            auto m = random_matrix(F, dims(rng), dims(rng), rng);
            size_t rank = m.rank();
            auto ker = m.kernel_basis();
            CHECK(rank + ker.cols() == m.cols());
            // kernel basis vectors are killed and independent
            for (size_t j = 0; j < ker.cols(); ++j) {
                std::vector<uint32_t> v(m.cols(), 0);
                for (const auto& [i, val] : ker.col(j)) v[i] = val;
                for (uint32_t x : m.apply(v)) CHECK(x == 0);
            }
            CHECK(ker.rank() == ker.cols());
            size_t expect = 1;
            for (size_t i = 0; i < ker.cols(); ++i) expect *= p;
            CHECK(kernel_size_by_enumeration(m) == expect);
        }
    }
}

TEST_CASE("solve examples") {
    PrimeField F2(2);

    auto id = FpMat::identity(F2, 3);
    std::vector<uint32_t> b{1, 0, 1};
    auto x = id.solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto m = FpMat::from_rows(F2, {{1, 1}});
    std::vector<uint32_t> one{1};
    auto y = m.solve(one);
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == one);

    auto z = FpMat(F2, 2, 2).solve(std::vector<uint32_t>{1, 0});
    CHECK(!z.has_value());

    CHECK_THROWS_AS((void)m.solve(std::vector<uint32_t>{1, 0}), std::invalid_argument);
}

TEST_CASE("solve(m, m*x) round trip") {
    std::mt19937 rng(13);
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        std::uniform_int_distribution<uint32_t> dist(0, p - 1);
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(F, 3, 4, rng);
            std::vector<uint32_t> x(4);
            for (auto& v : x) v = dist(rng);
            auto b = m.apply(x);
            auto x2 = m.solve(b);
            REQUIRE(x2.has_value());
            CHECK(m.apply(*x2) == b);
        }
    }
}

TEST_CASE("matrix algebra and subspace helpers") {
    PrimeField F3(3);
    std::mt19937 rng(17);
    auto a = random_matrix(F3, 4, 3, rng);
    auto b = random_matrix(F3, 3, 5, rng);
    auto c = random_matrix(F3, 5, 2, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());

    auto im = a.image_basis();
    CHECK(im.cols() == a.rank());
    for (size_t j = 0; j < a.cols(); ++j) {
        std::vector<uint32_t> v(a.rows(), 0);
        for (const auto& [i, val] : a.col(j)) v[i] = val;
        CHECK(in_span(im, v));
    }

    auto reps = quotient_reps(im, a.rows());
    CHECK(reps.cols() == a.rows() - im.cols());
    CHECK(subspace_sum_dim(im, reps) == a.rows());

    auto coords = express_in_basis(im, a);
    CHECK(im * coords == a);
}

TEST_CASE("dense and sparse elimination agree") {
    std::mt19937 rng(23);
    PrimeField F5(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(F5, 6, 7, rng); // dense-ish: dense path
        double saved = FpMat::dense_threshold();
        FpMat::set_dense_threshold(2.0); // force sparse
        auto sparse = m.rref();
        FpMat::set_dense_threshold(0.0); // force dense
        auto dense = m.rref();
        FpMat::set_dense_threshold(saved);
        CHECK(sparse.mat == dense.mat);
        CHECK(sparse.pivots == dense.pivots);
    }
}
