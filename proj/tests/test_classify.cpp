#include "doctest.h"

#include "unitgroups/classify.hpp"

#include <random>

using namespace unitgroups;

namespace {

const Bounds kBounds = Bounds::defaults();
const RuleSet kRules = RuleSet::defaults();

using Status = Verdict::Status;

AbelianGroup G(const std::string& s) { return AbelianGroup::parse(s); }

} // namespace

TEST_CASE("domains") {
    auto v2 = classify_domain(G("C2"));
    CHECK(v2.status == Status::Realizable);
    REQUIRE(v2.witness);
    CHECK(v2.witness->presentation.family == Family::NilpotentExtension);
    CHECK(v2.witness->presentation.moduli.empty());

    auto v7 = classify_domain(AbelianGroup::cyclic(7));  // 7 = 8 - 1
    CHECK(v7.status == Status::Realizable);
    CHECK(v7.witness_class == "F(8)");

    CHECK(classify_domain(G("C2 x C2")).status == Status::NotRealizable);
    CHECK(classify_domain(G("C2 x C2")).obstructions[0].rule == "domain.not-cyclic");
    CHECK(classify_domain(AbelianGroup::cyclic(5)).status == Status::NotRealizable);
    CHECK(classify_domain(AbelianGroup()).status == Status::Realizable);  // F_2
    CHECK(classify_domain(AbelianGroup::cyclic(4)).status == Status::Realizable);
    CHECK(classify_domain(AbelianGroup::cyclic(6)).status == Status::Realizable);
}

TEST_CASE("torsion-free classification") {
    auto v = classify_torsion_free(G("C2 x C3"));
    CHECK(v.status == Status::Realizable);
    REQUIRE(v.witness);
    CHECK(v.witness->presentation.family == Family::AnRing);
    CHECK(v.witness->presentation.an_index == 0);

    auto bad = classify_torsion_free(G("C4 x C3"));
    CHECK(bad.status == Status::NotRealizable);
    CHECK(bad.obstructions[0].rule == "torsion-free.z2-with-z3");

    auto five = classify_torsion_free(AbelianGroup::cyclic(5));
    CHECK(five.status == Status::NotRealizable);
    CHECK(five.obstructions[0].rule == "torsion-free.cyclic-factor-orders");

    CHECK(classify_torsion_free(G("C9")).status == Status::NotRealizable);
    CHECK(classify_torsion_free(G("C3")).status == Status::NotRealizable);
    CHECK(classify_torsion_free(G("C3")).obstructions[0].rule == "torsion-free.even-order");
    CHECK(classify_torsion_free(G("C8")).status == Status::NotRealizable);
}

TEST_CASE("torsion-free verdicts match the constraint predicate exhaustively") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 5; ++c) {
                AbelianGroup::PartsMap parts;
                for (int j = 0; j < b; ++j) parts[2].push_back(2);
                for (int j = 0; j < a; ++j) parts[2].push_back(1);
                if (c) parts[3] = std::vector<int>(static_cast<size_t>(c), 1);
                auto g = AbelianGroup::from_parts(std::move(parts));
                bool expected = (a + b >= 1) && (c < 1 || a >= 1);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                REQUIRE((classify_torsion_free(g).status == Status::Realizable) == expected);
            }
}

TEST_CASE("cyclic classification matches the hand table on 1..50, 44, 100") {
    // realizable orders <= 50 from the coprime-block forms:
    //   evens: all except 32 and 44 (33 and 45 are not prime powers plus
    //   no other form applies; 44 = 4*11 needs 11 = 1 mod 4)
    //   odds: 1, 3, 7, 15, 21 = 3*7, 31; everything else fails
    std::set<i64> realizable{1,  2,  3,  4,  6,  7,  8,  10, 12, 14, 15, 16, 18, 20, 21,
                             22, 24, 26, 28, 30, 31, 34, 36, 38, 40, 42, 46, 48, 50};
    for (i64 n = 1; n <= 50; ++n) {
        CAPTURE(n);
        auto v = classify_cyclic(n);
        REQUIRE((v.status == Status::Realizable) == (realizable.count(n) > 0));
        if (v.status == Status::NotRealizable)
            CHECK(v.obstructions[0].rule == "cyclic.no-coprime-factorization");
    }
    CHECK(classify_cyclic(44).status == Status::NotRealizable);
    CHECK(classify_cyclic(100).status == Status::Realizable);  // 4 * 25, primes of 25 are 1 mod 4
}

TEST_CASE("cyclic witnesses verify through the oracle") {
    for (i64 n : {1, 2, 4, 6, 12, 21, 24, 100}) {
        CAPTURE(n);
        auto v = classify_cyclic(n);
        REQUIRE(v.status == Status::Realizable);
        REQUIRE(v.witness);
        CHECK(v.witness->claimed_group == AbelianGroup::cyclic(n));
        CHECK(verify_certificate(*v.witness, kBounds).ok);
    }
    // the named instances: units of Z/13 are C12, units of F_9 x F_4 are C24
    auto z13 = unit_group_finite(build_module_ring(RingPresentation::zmod(13)), kBounds);
    CHECK(z13.structure == AbelianGroup::cyclic(12));
    auto f9f4 = evaluate_presentation(
        RingPresentation::direct_product(
            {RingPresentation::finite_field(3, 2), RingPresentation::finite_field(2, 2)}),
        kBounds);
    CHECK(f9f4.structure == AbelianGroup::cyclic(24));
}

TEST_CASE("cyclic block forms beyond finite fields") {
    // 20 = 4 * 5 is not q - 1 (21 = 3*7) and has no coprime split into
    // admissible blocks except as (5-1)*5, realized by Z/25
    auto v20 = classify_cyclic(20);
    REQUIRE(v20.status == Status::Realizable);
    REQUIRE(v20.witness);
    CHECK(v20.witness->presentation.base == BaseRing::Zmod);
    CHECK(v20.witness->presentation.modulus == 25);
    CHECK(verify_certificate(*v20.witness, kBounds).ok);

    // 68 = 4 * 17 is only realizable through the Gaussian construction
    // with a split prime over 17
    auto v68 = classify_cyclic(68);
    REQUIRE(v68.status == Status::Realizable);
    REQUIRE(v68.witness);
    CHECK(v68.witness->presentation.base == BaseRing::Zi);
    REQUIRE(v68.witness->presentation.moduli.size() == 1);
    CHECK(v68.witness->presentation.moduli[0].norm() == 17);
    CHECK(verify_certificate(*v68.witness, kBounds).ok);

    // 2d with d odd: 38 = 2 * 19, no field has 39 units
    auto v38 = classify_cyclic(38);
    REQUIRE(v38.status == Status::Realizable);
    CHECK(v38.witness->presentation.base == BaseRing::Z);
    CHECK(verify_certificate(*v38.witness, kBounds).ok);
}

TEST_CASE("ditor cardinalities") {
    CHECK(ditor_cardinality(10).status == Status::Realizable);
    CHECK(ditor_cardinality(21).status == Status::Realizable);
    CHECK(ditor_cardinality(105).status == Status::Realizable);  // 7 * 15
    CHECK(ditor_cardinality(5).status == Status::NotRealizable);
    CHECK(ditor_cardinality(1).status == Status::Realizable);
    CHECK(ditor_cardinality(9).status == Status::Realizable);  // 3 * 3
    CHECK(ditor_cardinality(11).status == Status::NotRealizable);
    CHECK(ditor_cardinality(25).status == Status::NotRealizable);

    auto v = ditor_cardinality(21);
    REQUIRE(v.witness);
    CHECK(verify_certificate(*v.witness, kBounds).ok);
    CHECK(v.witness->claimed_group.order() == 21);

    for (i64 n = 2; n <= 2000; n += 2) {
        CAPTURE(n);
        REQUIRE(ditor_cardinality(n).status == Status::Realizable);
    }
}

TEST_CASE("reduced classification") {
    auto v = classify_reduced(G("C8 x C3"), kBounds);
    CHECK(v.status == Status::Realizable);
    REQUIRE(v.witness);
    CHECK(verify_certificate(*v.witness, kBounds).ok);

    auto block = classify_reduced(G("C2 x C4 x C3"), kBounds);
    CHECK(block.status == Status::Realizable);
    REQUIRE(block.witness);
    CHECK(verify_certificate(*block.witness, kBounds).ok);

    auto five = classify_reduced(AbelianGroup::cyclic(5), kBounds);
    CHECK(five.status == Status::NotRealizable);
    CHECK(five.obstructions[0].rule == "reduced.no-field-product-decomposition");

    CHECK(classify_reduced(G("C3 x C3"), kBounds).status == Status::Realizable);
    CHECK(classify_reduced(G("C4 x C16"), kBounds).status == Status::Realizable);
    CHECK(classify_reduced(G("C3 x C9"), kBounds).status == Status::NotRealizable);

    Bounds tiny = kBounds;
    tiny.reduced_search_limit = 10;
    auto big = classify_reduced(G("C8 x C3"), tiny);
    CHECK(big.status == Status::Unknown);
    CHECK(big.notes.find("bound") != std::string::npos);
}

TEST_CASE("reduced verdicts agree with a forward enumeration up to order 100") {
    // independent route: build every product of finite-field unit groups
    // and at most one torsion-free block, then compare memberships
    const i64 limit = 100;
    std::vector<i64> qminus1;
    for (i64 q = 3; q <= limit + 1; ++q)
        if (is_prime_power(q)) qminus1.push_back(q - 1);
    std::set<AbelianGroup> fields{AbelianGroup()};
    for (bool grew = true; grew;) {
        grew = false;
        for (auto it = fields.begin(); it != fields.end(); ++it) {
            for (i64 m : qminus1) {
                if (it->order() * m > limit) continue;
                auto next = it->direct_product(AbelianGroup::cyclic(m));
                if (fields.insert(next).second) grew = true;
            }
        }
    }
    std::set<AbelianGroup> reachable = fields;
    for (auto& base : fields)
        for (int a = 0; a <= 7; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 4; ++c) {
                    if (a + b < 1 || (c >= 1 && a < 1)) continue;
                    i64 v = checked_pow(2, a + 2 * b) * checked_pow(3, c);
                    if (base.order() * v > limit) continue;
                    AbelianGroup::PartsMap parts;
                    for (int j = 0; j < b; ++j) parts[2].push_back(2);
                    for (int j = 0; j < a; ++j) parts[2].push_back(1);
                    if (c) parts[3] = std::vector<int>(static_cast<size_t>(c), 1);
                    reachable.insert(base.direct_product(AbelianGroup::from_parts(parts)));
                }
    for (i64 n = 1; n <= limit; ++n)
        for (auto& g : AbelianGroup::all_of_order(n)) {
            CAPTURE(g.str());
            bool expected = reachable.count(g) > 0;
            REQUIRE((classify_reduced(g, kBounds).status == Status::Realizable) == expected);
        }
}

TEST_CASE("characteristic-zero verdicts for the flagship examples") {
    auto good = classify_char0(G("C4 x C11^2"), kRules, kBounds);
    CHECK(good.status == Status::Realizable);
    REQUIRE(good.witness);
    CHECK(good.witness->citation == "char0.z4-gaussian-extension");

    // default rules leave C4 x C4 x C11 open (the C44 x C4 splitting passes)
    auto open = classify_char0(G("C4 x C4 x C11"), kRules, kBounds);
    CHECK(open.status == Status::Unknown);

    auto closed = classify_char0(G("C4 x C4 x C11"), RuleSet::with_f2(), kBounds);
    CHECK(closed.status == Status::NotRealizable);
    for (auto& t : closed.trace) CHECK(t.violated != "passes");

    auto unknown = classify_char0(G("C4 x C16"), kRules, kBounds);
    CHECK(unknown.status == Status::Unknown);
    CHECK_FALSE(unknown.notes.empty());

    // odd order is impossible in characteristic zero
    auto odd = classify_char0(G("C9"), kRules, kBounds);
    CHECK(odd.status == Status::NotRealizable);
    CHECK(odd.obstructions[0].rule == "char0.odd-order");

    // any group with a Z/2 direct factor is realizable
    auto z2h = classify_char0(G("C2 x C9^3"), kRules, kBounds);
    CHECK(z2h.status == Status::Realizable);
    CHECK(z2h.witness->citation == "char0.z2-nilpotent-extension");
    CHECK(verify_certificate(*z2h.witness, kBounds).ok);

    // C4 alone comes from Z[i]
    auto c4 = classify_char0(G("C4"), kRules, kBounds);
    CHECK(c4.status == Status::Realizable);
    CHECK(verify_certificate(*c4.witness, kBounds).ok);

    // registry special case
    auto reg = classify_char0(G("C8 x C4"), kRules, kBounds);
    CHECK(reg.status == Status::Realizable);
    CHECK(verify_certificate(*reg.witness, kBounds).ok);

    // minimum 2-exponent >= 3 excluded by the splitting engine
    auto c8c8 = classify_char0(G("C8 x C8"), kRules, kBounds);
    CHECK(c8c8.status == Status::NotRealizable);
}

TEST_CASE("general classification") {
    CHECK(classify_general(G("C6"), kRules, kBounds).status == Status::Realizable);
    CHECK(classify_general(AbelianGroup::cyclic(11), kRules, kBounds).status ==
          Status::NotRealizable);
    CHECK(classify_general(AbelianGroup::cyclic(44), kRules, kBounds).status ==
          Status::NotRealizable);
    CHECK(classify_general(G("C2 x C8 x C25"), kRules, kBounds).status == Status::Realizable);

    auto v = classify_general(G("C4 x C11^2"), kRules, kBounds);
    CHECK(v.status == Status::Realizable);

    auto f2 = classify_general(G("C4 x C4 x C11"), RuleSet::with_f2(), kBounds);
    CHECK(f2.status == Status::NotRealizable);
    // the trace covers every splitting, including the finite-ring-only branch
    CHECK(f2.trace.size() == 6);
    for (auto& t : f2.trace) CHECK(t.violated != "passes");

    CHECK(classify_general(G("C4 x C16"), kRules, kBounds).status == Status::Unknown);

    // odd non-cyclic groups outside the cited corollaries stay open
    CHECK(classify_general(G("C3 x C9"), kRules, kBounds).status == Status::Unknown);
    // but odd orders that are not Mersenne products are excluded outright
    CHECK(classify_general(G("C5 x C5"), kRules, kBounds).status == Status::NotRealizable);
}

TEST_CASE("cyclic completeness: the general engine never contradicts classify_cyclic") {
    for (i64 n = 1; n <= 10000; ++n) {
        CAPTURE(n);
        auto cyc = classify_cyclic(n);
        auto gen = classify_general(AbelianGroup::cyclic(n), kRules, kBounds);
        REQUIRE((cyc.status == Status::Realizable) == (gen.status != Status::NotRealizable));
    }
}

TEST_CASE("enabling the gated rule never flips Realizable") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<i64> order(2, 400);
    auto f2 = RuleSet::with_f2();
    for (int t = 0; t < 150; ++t) {
        auto all = AbelianGroup::all_of_order(order(rng));
        auto& g = all[static_cast<size_t>(rng() % all.size())];
        auto base = classify_general(g, kRules, kBounds);
        auto gated = classify_general(g, f2, kBounds);
        CAPTURE(g.str());
        if (base.status == Status::Realizable) REQUIRE(gated.status == Status::Realizable);
        if (base.status == Status::NotRealizable)
            REQUIRE(gated.status == Status::NotRealizable);
    }
}

TEST_CASE("realizable verdicts with witnesses verify against the oracle up to order 200") {
    int verified = 0;
    for (i64 n = 1; n <= 200; ++n) {
        for (auto& g : AbelianGroup::all_of_order(n)) {
            auto v = classify_general(g, kRules, kBounds);
            if (v.status != Status::Realizable || !v.witness) continue;
            CAPTURE(g.str());
            REQUIRE(v.witness->claimed_group == g);
            REQUIRE(verify_certificate(*v.witness, kBounds).ok);
            ++verified;
        }
    }
    CHECK(verified == 240);
}
