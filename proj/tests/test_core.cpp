#include <doctest.h>

#include <map>
#include <random>

#include "addsys/digit_set.hpp"
#include "addsys/set_expr.hpp"

#include "oracles.hpp"

using namespace addsys;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values) out.push_back(Int(v));
    return out;
}

RadixSeq repeat2() { return RadixSeq({Int(2)}, RadixSeq::Tail::RepeatLast); }

// Random expression over the four forms, kept small enough to enumerate.
SetExpr random_expr(std::mt19937_64& rng, int depth = 0) {
    std::uniform_int_distribution<int> kind(0, depth < 2 ? 3 : 1);
    switch (kind(rng)) {
        case 0: return SetExpr::explicit_set(oracles::random_digit_set(rng, 6, 30));
        case 1: return SetExpr::ray(Int(std::uniform_int_distribution<int>(1, 9)(rng)));
        case 2:
            return SetExpr::dilated_node(Int(std::uniform_int_distribution<int>(2, 5)(rng)),
                                         random_expr(rng, depth + 1));
        default: {
            std::vector<int> included;
            std::uniform_int_distribution<int> coin(0, 1);
            for (int i = 1; i <= 5; ++i) {
                if (coin(rng)) included.push_back(i);
            }
            if (included.empty()) included.push_back(1);
            return SetExpr::bns_subsum(repeat2(), IndexSet(included, 5, coin(rng) == 1));
        }
    }
}

}  // namespace

TEST_CASE("digit set normalization sorts, deduplicates, validates") {
    DigitSet s = DigitSet::normalized(ints({0, 2, 1, 2}));
    CHECK(s.elements() == ints({0, 1, 2}));

    CHECK_THROWS_WITH_AS(DigitSet::normalized(ints({1, 3})), doctest::Contains("MissingZero"), Error);
    CHECK_THROWS_WITH_AS(DigitSet::normalized(ints({-1, 2})), doctest::Contains("NegativeElement"),
                         Error);

    CHECK(DigitSet::normalized(ints({0})).is_singleton_zero());
}

TEST_CASE("elements_below enumerates each expression form") {
    CHECK(SetExpr::ray(8).elements_below(30) == ints({0, 8, 16, 24}));

    SetExpr dilated = SetExpr::dilated_node(3, SetExpr::explicit_set(DigitSet::normalized(ints({0, 1, 2}))));
    CHECK(dilated.elements_below(7) == ints({0, 3, 6}));

    SetExpr subsum = SetExpr::bns_subsum(repeat2(), IndexSet::finite({2, 4}));
    CHECK(subsum.elements_below(16) == ints({0, 2, 8, 10}));

    // cross-check the subsum against direct digit enumeration: digits at
    // positions 2 and 4 of the binary tower contribute 2 and 8
    std::vector<Int> expect;
    for (int d4 = 0; d4 <= 1; ++d4) {
        for (int d2 = 0; d2 <= 1; ++d2) expect.push_back(Int(2 * d2 + 8 * d4));
    }
    std::sort(expect.begin(), expect.end());
    CHECK(subsum.elements_below(16) == expect);

    CHECK(subsum.elements_below(0).empty());
}

TEST_CASE("subsum membership and minimum agree with enumeration") {
    SetExpr subsum = SetExpr::bns_subsum(RadixSeq({Int(2), Int(3), Int(2)}, RadixSeq::Tail::RepeatLast),
                                         IndexSet({2}, 3, true));
    std::vector<Int> listed = subsum.elements_below(200);
    for (Int v = 0; v < 200; ++v) {
        bool in_list = std::binary_search(listed.begin(), listed.end(), v);
        CHECK(subsum.contains(v) == in_list);
    }
    REQUIRE(subsum.min_positive().has_value());
    CHECK(*subsum.min_positive() == listed[1]);
}

TEST_CASE("sumset matches the worked examples") {
    SetExpr a = SetExpr::explicit_set(DigitSet::normalized(ints({0, 1})));
    SetExpr b = SetExpr::explicit_set(DigitSet::normalized(ints({0, 2, 4})));
    CHECK(sumset(a, b, 10) == ints({0, 1, 2, 3, 4, 5}));

    SetExpr c = SetExpr::explicit_set(DigitSet::normalized(ints({0, 1, 2})));
    SetExpr d = SetExpr::explicit_set(DigitSet::normalized(ints({0, 3})));
    CHECK(sumset(c, d, 10) == ints({0, 1, 2, 3, 4, 5}));

    SetExpr zero = SetExpr::explicit_set(DigitSet::zero());
    SetExpr ray = SetExpr::ray(7);
    CHECK(sumset(zero, ray, 40) == ray.elements_below(40));
}

TEST_CASE("direct sum detection") {
    CHECK(is_direct_sum(DigitSet::normalized(ints({0, 1})), DigitSet::normalized(ints({0, 2, 4}))));
    CHECK_FALSE(is_direct_sum(DigitSet::normalized(ints({0, 1})), DigitSet::normalized(ints({0, 1}))));
    CHECK(is_direct_sum(DigitSet::normalized(ints({0, 1, 2})), DigitSet::normalized(ints({0, 3, 6}))));
}

TEST_CASE("dilation of expressions") {
    SetExpr s = SetExpr::explicit_set(DigitSet::normalized(ints({0, 1, 2})));
    CHECK(s.dilate(1) == s);
    CHECK(s.dilate(2).elements_below(10) == ints({0, 2, 4}));
    CHECK(SetExpr::interval(4).dilate(4).elements_below(100) == ints({0, 4, 8, 12}));
    CHECK(SetExpr::ray(3).dilate(2) == SetExpr::ray(6));
}

TEST_CASE("property: dilation commutes with bounded enumeration") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> d_dist(1, 16);
    std::uniform_int_distribution<int> n_dist(0, 10000);
    for (int trial = 0; trial < 60; ++trial) {
        SetExpr x = random_expr(rng);
        Int d(d_dist(rng)), n(n_dist(rng));
        std::vector<Int> scaled = x.elements_below(n);
        for (Int& v : scaled) v *= d;
        CHECK(x.dilate(d).elements_below(d * n) == scaled);
    }
}

TEST_CASE("property: direct sum iff every sum has one representation") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        DigitSet a = oracles::random_digit_set(rng, 5, 20);
        DigitSet b = oracles::random_digit_set(rng, 5, 20);
        std::map<Int, int> multiplicity;
        for (const Int& x : a.elements()) {
            for (const Int& y : b.elements()) multiplicity[x + y] += 1;
        }
        bool all_unique = true;
        for (const auto& [sum, count] : multiplicity) all_unique = all_unique && count == 1;
        CHECK(is_direct_sum(a, b) == all_unique);

        if (all_unique) {
            // dilations of a direct sum stay direct
            CHECK(is_direct_sum(a.dilated(7), b.dilated(7)));
        }
    }
}

TEST_CASE("property: sumset is commutative with identity {0}") {
    std::mt19937_64 rng(31337);
    SetExpr zero = SetExpr::explicit_set(DigitSet::zero());
    for (int trial = 0; trial < 40; ++trial) {
        SetExpr x = random_expr(rng);
        SetExpr y = random_expr(rng);
        CHECK(sumset(x, y, 300) == sumset(y, x, 300));
        CHECK(sumset(x, zero, 300) == x.elements_below(300));
    }
}

TEST_CASE("structural equality is on normalized forms") {
    CHECK(SetExpr::explicit_set(DigitSet::normalized(ints({0, 2, 1}))) ==
          SetExpr::explicit_set(DigitSet::normalized(ints({0, 1, 2}))));
    CHECK(SetExpr::ray(4) != SetExpr::ray(5));
    SetExpr nested = SetExpr::dilated_node(2, SetExpr::ray(3));
    CHECK(nested == SetExpr::dilated_node(2, SetExpr::ray(3)));
    CHECK(nested.as_ray_modulus() == Int(6));
}

TEST_CASE("exact division of expressions") {
    SetExpr evens = SetExpr::explicit_set(DigitSet::normalized(ints({0, 4, 8})));
    REQUIRE(evens.divided_exact(4).has_value());
    CHECK(evens.divided_exact(4)->elements_below(10) == ints({0, 1, 2}));
    CHECK_FALSE(SetExpr::explicit_set(DigitSet::normalized(ints({0, 3}))).divided_exact(2).has_value());
    CHECK(SetExpr::ray(6).divided_exact(3) == SetExpr::ray(2));
    CHECK(SetExpr::dilated_node(2, SetExpr::ray(3)).divided_exact(3)->as_ray_modulus() == Int(2));
}
