#include "doctest.h"

#include "unitgroups/poly.hpp"
#include "unitgroups/presentation.hpp"

using namespace unitgroups;

TEST_CASE("cyclotomic polynomials of prime-power index") {
    CHECK(cyclotomic(2, 1).c == std::vector<i64>{1, 1});
    CHECK(cyclotomic(3, 1).c == std::vector<i64>{1, 1, 1});
    CHECK(cyclotomic(2, 2).c == std::vector<i64>{1, 0, 1});
    CHECK(cyclotomic(5, 1).c == std::vector<i64>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(cyclotomic(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic(3, 0), std::invalid_argument);

    for (i64 p : {2, 3, 5, 7}) {
        for (int k = 1; k <= 3; ++k) {
            auto f = cyclotomic(p, k);
            CHECK(f.eval(1) == p);
            CHECK(f.degree() == (p - 1) * checked_pow(p, k - 1));
        }
    }
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = content_primitive(IntPolynomial({2, 4, 6}));
    CHECK(c1 == 2);
    CHECK(p1.c == std::vector<i64>{1, 2, 3});

    auto [c2, p2] = content_primitive(IntPolynomial({1, 1}));
    CHECK(c2 == 1);
    CHECK(p2.c == std::vector<i64>{1, 1});

    auto [c3, p3] = content_primitive(IntPolynomial({0, -4}));
    CHECK(c3 == 4);
    CHECK(p3.c == std::vector<i64>{0, -1});

    CHECK_THROWS_AS(content_primitive(IntPolynomial()), std::invalid_argument);

    for (auto coeffs : {std::vector<i64>{6, -9, 12}, {5}, {-7, 0, 14}, {8, 12, -20, 4}}) {
        auto f = IntPolynomial(coeffs);
        auto [c, p] = content_primitive(f);
        CHECK(c > 0);
        i64 g = 0;
        for (i64 v : p.c) g = std::gcd(g, v < 0 ? -v : v);
        CHECK(g == 1);
        CHECK(p.scaled(c) == f);
    }
}

TEST_CASE("poly_mod_monic reduces degree") {
    // x^3 mod (x^2+x+1) = x * x^2 = x(-x-1) = -x^2-x = 1
    Poly<i64> m({1, 1, 1});
    Poly<i64> x3({0, 0, 0, 1});
    CHECK(poly_mod_monic(x3, m).c == std::vector<i64>{1});
    CHECK_THROWS_AS(poly_mod_monic(x3, Poly<i64>({1, 2})), std::invalid_argument);
}

TEST_CASE("expression parser") {
    auto p1 = PolyExprParser::parse("x^2 - y - 1");
    CHECK(p1.terms.size() == 3);
    CHECK(p1.terms.at({2, 0}) == GaussianInt{1});
    CHECK(p1.terms.at({0, 1}) == GaussianInt{-1});
    CHECK(p1.terms.at({0, 0}) == GaussianInt{-1});

    auto p2 = PolyExprParser::parse("(1+i)y");
    CHECK(p2.terms.size() == 1);
    CHECK(p2.terms.at({0, 1}) == GaussianInt{1, 1});

    auto p3 = PolyExprParser::parse("y^3");
    CHECK(p3.terms.at({0, 3}) == GaussianInt{1});

    CHECK(PolyExprParser::parse("-2i + 3").terms.at({0, 0}) == GaussianInt{3, -2});
    CHECK(PolyExprParser::parse("i*i").terms.at({0, 0}) == GaussianInt{-1});
    CHECK(PolyExprParser::parse("2x*3x").terms.at({2, 0}) == GaussianInt{6});
    CHECK(PolyExprParser::parse("(x+1)(x-1) - x^2 + 1").is_zero());
    CHECK_THROWS_AS(PolyExprParser::parse("x +"), std::invalid_argument);
    CHECK_THROWS_AS(PolyExprParser::parse("z"), std::invalid_argument);
    CHECK_THROWS_AS(PolyExprParser::parse("(x"), std::invalid_argument);
}

TEST_CASE("presentation JSON round trips") {
    auto an = RingPresentation::an_ring(2);
    CHECK(RingPresentation::from_json(an.to_json()).to_json() == an.to_json());

    auto nil = RingPresentation::nilpotent_extension(BaseRing::Zi,
                                                     {GaussianInt{1, 1}, GaussianInt{3}});
    auto j = nil.to_json();
    CHECK(j["base"] == "Zi");
    CHECK(j["params"]["moduli"][0] == "1+i");
    CHECK(RingPresentation::from_json(j).to_json() == j);

    auto prod = RingPresentation::direct_product({RingPresentation::integers(), an});
    CHECK(RingPresentation::from_json(prod.to_json()).to_json() == prod.to_json());

    auto field = RingPresentation::finite_field(3, 2);
    CHECK(field.base_name() == "Zmod:3");
    CHECK(RingPresentation::from_json(field.to_json()).to_json() == field.to_json());

    CHECK_THROWS_AS(RingPresentation::from_json(json{{"base", "Q"},
                                                     {"family", "AnRing"},
                                                     {"params", {{"n", 1}}}}),
                    std::invalid_argument);
}
