#include "doctest.h"

#include "unitgroups/gaussian.hpp"
#include "unitgroups/smith.hpp"

#include <random>

using namespace unitgroups;

TEST_CASE("norms") {
    CHECK(GaussianInt(1, 1).norm() == 2);
    CHECK(GaussianInt(2, 1).norm() == 5);
    CHECK(GaussianInt(3).norm() == 9);
    CHECK(GaussianInt().norm() == 0);
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<i64> coord(-1000, 1000);
    for (int t = 0; t < 500; ++t) {
        GaussianInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("divmod rounds to the nearest lattice point") {
    auto [q1, r1] = divmod(GaussianInt{5}, GaussianInt{2, 1});
    CHECK(q1 == GaussianInt{2, -1});
    CHECK(r1.is_zero());

    auto [q2, r2] = divmod(GaussianInt{1}, GaussianInt{1, 1});
    CHECK(r2.norm() < 2);

    auto [q3, r3] = divmod(GaussianInt{7, 2}, GaussianInt{3});
    CHECK(q3 == GaussianInt{2, 1});
    CHECK(r3 == GaussianInt{1, -1});
    CHECK(GaussianInt{3} * q3 + r3 == GaussianInt{7, 2});
    CHECK(r3.norm() == 2);

    CHECK_THROWS_AS(divmod(GaussianInt{1}, GaussianInt{}), std::invalid_argument);
}

TEST_CASE("divmod invariant on random inputs") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<i64> coord(-500, 500);
    for (int t = 0; t < 1000; ++t) {
        GaussianInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.norm() < b.norm());
    }
}

TEST_CASE("canonical associates") {
    auto [a1, u1] = canonical_associate(GaussianInt{-2, 2});
    CHECK(a1 == GaussianInt{2, 2});
    CHECK(u1 * a1 == GaussianInt{-2, 2});
    CHECK(canonical_associate(GaussianInt{1, -1}).first == GaussianInt{1, 1});
    CHECK(canonical_associate(GaussianInt{-3, 0}).first == GaussianInt{3});
    CHECK(canonical_associate(GaussianInt{0, 5}).first == GaussianInt{5});
    CHECK(canonical_associate(GaussianInt{2, -1}).first == GaussianInt{2, -1});
}

TEST_CASE("factorization of small elements") {
    auto f2 = factor(GaussianInt{2});
    CHECK(f2.unit == GaussianInt{0, -1});
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == std::pair{GaussianInt{1, 1}, 2});

    auto f5 = factor(GaussianInt{5});
    CHECK(f5.unit == GaussianInt{1});
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first.norm() == 5);
    CHECK(f5.factors[1].first.norm() == 5);

    auto f21 = factor(GaussianInt{21});
    REQUIRE(f21.factors.size() == 2);
    for (auto& [p, e] : f21.factors) {
        CHECK(e == 1);
        // inert primes: norm p^2 with p = 3 mod 4
        i64 root = p.re;
        CHECK(p.im == 0);
        CHECK(p.norm() == root * root);
        CHECK(root % 4 == 3);
        CHECK(is_prime(root));
    }
    CHECK(f21.value() == GaussianInt{21});

    CHECK_THROWS_AS(factor(GaussianInt{}), std::invalid_argument);
}

TEST_CASE("factor recombines and is associate-invariant") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<i64> coord(-1000, 1000);
    int done = 0;
    for (int t = 0; done < 400 && t < 10000; ++t) {
        GaussianInt z{coord(rng), coord(rng)};
        if (z.is_zero() || z.norm() > 1000000) continue;
        ++done;
        auto f = factor(z);
        CHECK(f.value() == z);
        for (auto& unit : {GaussianInt{-1}, GaussianInt{0, 1}, GaussianInt{0, -1}}) {
            auto g = factor(unit * z);
            CHECK(g.factors == f.factors);
        }
    }
    CHECK(done == 400);
}

TEST_CASE("factor recombines exhaustively for norm <= 10^4") {
    for (i64 re = -100; re <= 100; ++re)
        for (i64 im = -100; im <= 100; ++im) {
            GaussianInt z{re, im};
            if (z.is_zero() || z.norm() > 10000) continue;
            auto f = factor(z);
            REQUIRE(f.value() == z);
            for (auto& [p, e] : f.factors) REQUIRE(canonical_associate(p).first == p);
        }
}

TEST_CASE("quotient additive structure follows the prime-power table") {
    CHECK(quotient_additive_structure(GaussianInt{2, 1}) == AbelianGroup::cyclic(5));
    CHECK(quotient_additive_structure(GaussianInt{3}) == AbelianGroup::from_orders({3, 3}));
    // (1+i)^3 = -2 + 2i
    GaussianInt p{1, 1};
    CHECK(quotient_additive_structure(p * p * p) == AbelianGroup::from_orders({4, 2}));
    CHECK(quotient_additive_structure(p * p) == AbelianGroup::from_orders({2, 2}));
    CHECK_THROWS_AS(quotient_additive_structure(GaussianInt{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_additive_structure(GaussianInt{}), std::invalid_argument);
}

TEST_CASE("quotient structure agrees with the SNF of the ideal lattice for norm <= 5000") {
    for (i64 re = -71; re <= 71; ++re)
        for (i64 im = -71; im <= 71; ++im) {
            GaussianInt z{re, im};
            if (z.norm() <= 1 || z.norm() > 5000) continue;
            // Z-lattice of the ideal (z): columns z and iz
            Matrix<i64> m(2, 2);
            m.at(0, 0) = z.re;
            m.at(1, 0) = z.im;
            m.at(0, 1) = -z.im;
            m.at(1, 1) = z.re;
            auto snf = smith_normal_form(m);
            auto d = snf.diagonal();
            auto expect = AbelianGroup::from_orders({d[0], d[1]});
            REQUIRE(quotient_additive_structure(z) == expect);
            REQUIRE(expect.order() == z.norm());
        }
}

TEST_CASE("gaussian serialization round trips") {
    for (auto& s : {"0", "1", "-1", "i", "-i", "3", "-2i", "1+i", "2-3i", "-7+11i"}) {
        auto z = parse_gaussian(s);
        CHECK(gaussian_str(z) == s);
    }
    CHECK(parse_gaussian("  1 + i ") == GaussianInt{1, 1});
    CHECK_THROWS_AS(parse_gaussian("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1+"), std::invalid_argument);
}

TEST_CASE("gaussian gcd divides both arguments") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<i64> coord(-200, 200);
    for (int t = 0; t < 300; ++t) {
        GaussianInt a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        if (a.is_zero() && b.is_zero()) continue;
        auto g = gaussian_gcd(a, b);
        CHECK_FALSE(g.is_zero());
        if (!a.is_zero()) CHECK(divides(g, a));
        if (!b.is_zero()) CHECK(divides(g, b));
    }
}
