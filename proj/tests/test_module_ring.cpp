#include "doctest.h"

#include "unitgroups/module_ring.hpp"
#include "unitgroups/oracle.hpp"

using namespace unitgroups;

TEST_CASE("Z/6 as a module ring enumerates six elements") {
    auto ring = build_module_ring(RingPresentation::zmod(6));
    CHECK(ring.rank == 1);
    CHECK(ring.additive_finite);
    CHECK(ring.additive_order == 6);
    CHECK(additive_elements(ring, 16).size() == 6);
    CHECK_THROWS_AS(additive_elements(ring, 5), bound_error);
}

TEST_CASE("A_0 is the quadratic ring with x^2 = -x - 1") {
    auto ring = build_module_ring(RingPresentation::an_ring(0));
    CHECK(ring.rank == 2);
    CHECK_FALSE(ring.additive_finite);
    // x * x = -1 - x
    const i64* row = ring.structure_row(1, 1);
    CHECK(row[0] == -1);
    CHECK(row[1] == -1);
}

TEST_CASE("A_n is torsion-free of rank 2^(n+1)") {
    // construction re-checks commutativity and associativity: exhaustively
    // up to rank 64 (n = 5), by deterministic sampling above
    for (int n = 0; n <= 6; ++n) {
        auto ring = build_module_ring(RingPresentation::an_ring(n));
        CHECK(ring.rank == (1 << (n + 1)));
        CHECK(ring.relations.rows == 0);
        CHECK_FALSE(ring.additive_finite);
    }
}

TEST_CASE("nilpotent extensions over Z") {
    auto p = RingPresentation::nilpotent_extension(BaseRing::Z, {GaussianInt{2}});
    auto ring = build_module_ring(p);
    CHECK(ring.rank == 2);
    // x^2 = 0 and 2x = 0
    const i64* row = ring.structure_row(1, 1);
    CHECK(row[0] == 0);
    CHECK(row[1] == 0);
    auto two_x = ring.canonical({0, 2});
    CHECK(ring.is_zero_element(two_x));
    CHECK(nilradical_elements(ring, 100).size() == 2);

    auto p23 = RingPresentation::nilpotent_extension(BaseRing::Z, {GaussianInt{2}, GaussianInt{3}});
    CHECK(nilradical_elements(build_module_ring(p23), 100).size() == 6);
}

TEST_CASE("nilradical cardinality of a Z[i] extension is the product of quotient sizes") {
    auto p = RingPresentation::nilpotent_extension(BaseRing::Zi, {GaussianInt{3}});
    auto ring = build_module_ring(p);
    CHECK(nilradical_elements(ring, 100).size() == 9);  // |Z[i]/(3)| = 9

    auto q = RingPresentation::nilpotent_extension(BaseRing::Zi, {GaussianInt{1, 1}});
    CHECK(nilradical_elements(build_module_ring(q), 100).size() == 2);  // |Z[i]/(1+i)| = 2
}

TEST_CASE("the quadratic quotient example eliminates to a rank-6 module over Z[i]") {
    RingPresentation p;
    p.base = BaseRing::Zi;
    p.family = Family::EliminatedQuotient;
    p.generators = {"x", "y"};
    p.relations = {"x^2 - y - 1", "(1+i)y", "y^3"};
    p.nilradical = {"y"};
    p.quotient_units = {"1", "-1", "i", "-i", "x", "-x", "i*x", "-i*x"};
    auto ring = build_module_ring(p);
    CHECK(ring.base_rank == 6);
    CHECK(ring.rank == 12);
    CHECK_FALSE(ring.additive_finite);
    // the ideal (y) contains xy, which is independent of y and y^2:
    // mod (1+i) the ring is F_2[x]/((x+1)^6) and xy maps to
    // (x+1)^3 + (x+1)^2, so the nilradical is the F_2-span of
    // {y, xy, y^2, xy^2} with 16 elements
    CHECK(nilradical_elements(ring, 100).size() == 16);
}

TEST_CASE("finite fields as eliminated quotients") {
    auto f9 = build_module_ring(RingPresentation::finite_field(3, 2));
    CHECK(f9.additive_finite);
    CHECK(f9.additive_order == 9);
    auto f4 = build_module_ring(RingPresentation::finite_field(2, 2));
    CHECK(f4.additive_order == 4);
    auto f8 = build_module_ring(RingPresentation::finite_field(2, 3));
    CHECK(f8.additive_order == 8);
}

TEST_CASE("direct products build blockwise") {
    auto p = RingPresentation::direct_product(
        {RingPresentation::zmod(4), RingPresentation::zmod(9)});
    auto ring = build_module_ring(p);
    CHECK(ring.additive_order == 36);
}

TEST_CASE("elimination failures are loud") {
    RingPresentation p;
    p.base = BaseRing::Zi;
    p.family = Family::EliminatedQuotient;
    p.generators = {"x", "y"};
    p.relations = {"x^2 - y^2", "y^3"};  // nothing linear in either variable
    CHECK_THROWS_AS(build_module_ring(p), std::invalid_argument);

    RingPresentation q;
    q.base = BaseRing::Z;
    q.family = Family::EliminatedQuotient;
    q.generators = {"x"};
    q.relations = {"2x"};  // not module-finite: no unit leading coefficient
    CHECK_THROWS_AS(build_module_ring(q), std::invalid_argument);
}

TEST_CASE("construction rejects broken rings") {
    // a "ring" whose designated one is not an identity
    ModuleRing bad;
    bad.rank = 1;
    bad.mult_table = {0};  // e0 * e0 = 0
    bad.relations = Matrix<i64>(1, 1);
    bad.relations.at(0, 0) = 4;
    bad.one = {1};
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
}

TEST_CASE("canonical forms are stable") {
    auto ring = build_module_ring(RingPresentation::zmod(12));
    auto a = ring.canonical({25});
    auto b = ring.canonical({1});
    CHECK(a == b);
    CHECK(ring.same_element({13}, {1}));
    CHECK_FALSE(ring.same_element({13}, {2}));
    CHECK(ring.is_zero_element({24}));
}
