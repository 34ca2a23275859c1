#include <doctest.h>

#include "ss/degeneration.hpp"
#include "test_algebras.hpp"

using namespace tatehh;
using namespace tatehh::testing;

TEST_CASE("d1 triviality") {
    // ground field: one-row page
    auto r0 = d1_triviality_check(ground_field(2), 2, 2);
    CHECK(r0.ok);

    // dual numbers: the headline nontrivial instance
    auto r1 = d1_triviality_check(dual_numbers(2, 0), 2, 4);
    CHECK(r1.ok);
    CHECK(r1.violations.empty());

    // matrix algebra
    auto r2 = d1_triviality_check(matrix_algebra(2), 2, 2);
    CHECK(r2.ok);
}

TEST_CASE("degeneration: ground field matches") {
    DgAlgebra a = ground_field(2);
    VerifiedResolution w = verify_resolution(a, ground_field_resolution());
    auto rep = degeneration_check(a, bimodule_from_algebra(a), &w, 2, 6);
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.hh_total == 1);
    CHECK(rep.certified);
    for (size_t t : rep.e_infty_class_totals) CHECK(t == 1);
    for (const auto& [n, d] : rep.abutment) CHECK(d == 1);
    CHECK(rep.all_checks_ok());
}

TEST_CASE("degeneration: matrix algebra matches") {
    DgAlgebra a = matrix_algebra(2);
    VerifiedResolution w = verify_resolution(a, separable_resolution_m2(2));
    auto rep = degeneration_check(a, bimodule_from_algebra(a), &w, 2, 6);
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.hh_total == 1);
    for (size_t t : rep.e_infty_class_totals) CHECK(t == 1);
    CHECK(rep.all_checks_ok());
}

TEST_CASE("degeneration: dual numbers are honestly inconclusive") {
    DgAlgebra a = dual_numbers(2, 0);
    auto rep = degeneration_check(a, bimodule_from_algebra(a), nullptr, 2, 6);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.reason.find("vanish") != std::string::npos);
    // the report still carries the diverging table
    CHECK(rep.hh_dims.at(0) == 2);
    CHECK(rep.hh_dims.at(6) == 2);
}

TEST_CASE("degeneration: product of fields matches") {
    DgAlgebra a = product_of_fields(2);
    VerifiedResolution w = verify_resolution(a, separable_resolution_product(2));
    auto rep = degeneration_check(a, bimodule_from_algebra(a), &w, 2, 6);
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.hh_total == 2);
    for (size_t t : rep.e_infty_class_totals) CHECK(t == 2);
}

TEST_CASE("degeneration: acyclic DG algebra matches") {
    DgAlgebra a = acyclic_dg(2);
    VerifiedResolution w = verify_resolution(a, free_rank1_resolution());
    auto rep = degeneration_check(a, bimodule_from_algebra(a), &w, 2, 5);
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.hh_total == 1);
}

TEST_CASE("degeneration at an odd prime") {
    DgAlgebra a = ground_field(3);
    VerifiedResolution w = verify_resolution(a, ground_field_resolution());
    auto rep = degeneration_check(a, bimodule_from_algebra(a), &w, 3, 5);
    CHECK(rep.verdict == Verdict::Match);
    CHECK(rep.e_infty_class_totals.size() == 2); // even and odd classes
    for (size_t t : rep.e_infty_class_totals) CHECK(t == 1);
}
