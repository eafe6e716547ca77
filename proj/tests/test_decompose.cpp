#include <doctest.h>

#include <random>

#include "addsys/decompose.hpp"
#include "addsys/transform.hpp"

#include "oracles.hpp"

using namespace addsys;

namespace {

DigitSet digits(std::initializer_list<long> values) {
    std::vector<Int> elems;
    for (long v : values) elems.push_back(Int(v));
    return DigitSet::normalized(std::move(elems));
}

std::vector<Int> ints(std::initializer_list<long> values) {
    std::vector<Int> out;
    for (long v : values) out.push_back(Int(v));
    return out;
}

}  // namespace

TEST_CASE("the interval equation [0,ab) = [0,a) (+) X") {
    CHECK(solve_ax_interval(2, 3).elements() == ints({0, 2, 4}));
    CHECK(solve_ax_interval(7, 1).elements() == ints({0}));
    CHECK(solve_ax_interval(3, 3).elements() == ints({0, 3, 6}));

    // the returned X really solves the equation, for every small a, b
    for (long a = 1; a <= 12; ++a) {
        for (long b = 1; b <= 12; ++b) {
            DigitSet x = solve_ax_interval(a, b);
            DigitSet left = DigitSet::interval(a);
            CHECK(is_direct_sum(left, x));
            CHECK(left.sumset_with(x) == DigitSet::interval(a * b));
        }
    }
}

TEST_CASE("polynomial identity oracle") {
    CHECK(poly_identity_check(DigitSet::interval(6), digits({0, 1}), digits({0, 2, 4})));
    CHECK_FALSE(poly_identity_check(digits({0, 2}), digits({0, 1}), digits({0, 1})));
    CHECK(poly_identity_check(DigitSet::interval(9), digits({0, 1, 2}), digits({0, 3, 6})));
    CHECK_FALSE(poly_identity_check(DigitSet::interval(7), digits({0, 1}), digits({0, 2, 4})));
}

TEST_CASE("decompositions of [0,6)") {
    std::vector<Decomposition> decs = decompose_set(DigitSet::interval(6));
    REQUIRE(decs.size() == 2);
    CHECK(decs[0].left.elements() == ints({0, 1}));
    CHECK(decs[0].right.elements() == ints({0, 2, 4}));
    CHECK(decs[1].left.elements() == ints({0, 1, 2}));
    CHECK(decs[1].right.elements() == ints({0, 3}));
}

TEST_CASE("indecomposable examples") {
    CHECK(decompose_set(digits({0, 1, 2, 4})).empty());
    CHECK(is_indecomposable_set(digits({0, 1, 2})));
    CHECK(is_indecomposable_set(digits({0, 1, 2, 4, 8})));
    CHECK_FALSE(is_indecomposable_set(DigitSet::interval(4)));

    // {0, 1, 2, 4, ..., 2^(n-2)} stays indecomposable as n grows
    for (int n = 2; n <= 10; ++n) {
        std::vector<Int> elems = {Int(0)};
        Int p = 1;
        for (int j = 0; j < n - 1; ++j) {
            elems.push_back(p);
            p *= 2;
        }
        CHECK(is_indecomposable_set(DigitSet::normalized(std::move(elems))));
    }
}

TEST_CASE("triple product set has exactly the three groupings") {
    // {0,1} (+) {0,3} (+) {0,9}
    DigitSet a = digits({0, 1, 3, 4, 9, 10, 12, 13});
    std::vector<Decomposition> decs = decompose_set(a);
    std::vector<Decomposition> brute = decompose_set_bruteforce(a);
    CHECK(decs == brute);
    REQUIRE(decs.size() == 3);
    CHECK(decs[0].left.elements() == ints({0, 1}));
    CHECK(decs[0].right.elements() == ints({0, 3, 9, 12}));
    CHECK(decs[1].left.elements() == ints({0, 1, 3, 4}));
    CHECK(decs[1].right.elements() == ints({0, 9}));
    CHECK(decs[2].left.elements() == ints({0, 1, 9, 10}));
    CHECK(decs[2].right.elements() == ints({0, 3}));
}

TEST_CASE("brute force splitter agrees with the examples") {
    CHECK(decompose_set_bruteforce(DigitSet::interval(6)) == decompose_set(DigitSet::interval(6)));
    CHECK(decompose_set_bruteforce(digits({0, 1})).empty());
    CHECK_THROWS_WITH_AS(decompose_set_bruteforce(DigitSet::interval(20)),
                         doctest::Contains("SetTooLarge"), Error);
}

TEST_CASE("interval decomposition counts") {
    CHECK(interval_decompositions(6).size() == 2);

    std::vector<Decomposition> four = interval_decompositions(4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].left.elements() == ints({0, 1}));
    CHECK(four[0].right.elements() == ints({0, 2}));

    std::vector<Decomposition> twelve = interval_decompositions(12);
    CHECK(twelve.size() >= 4);
    bool has_non_divisor_form = false;
    for (const Decomposition& d : twelve) {
        if (d.left.elements() == ints({0, 1, 6, 7}) && d.right.elements() == ints({0, 2, 4})) {
            has_non_divisor_form = true;
        }
    }
    CHECK(has_non_divisor_form);
    CHECK(twelve == decompose_set_bruteforce(DigitSet::interval(12)));
}

TEST_CASE("property: splitter equals brute force on random digit sets") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 200; ++trial) {
        DigitSet a = oracles::random_digit_set(rng, 12, 24);
        CHECK(decompose_set(a) == decompose_set_bruteforce(a));
    }
}

TEST_CASE("property: every decomposition is a checked direct sum of the right size") {
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 80; ++trial) {
        DigitSet a = oracles::random_digit_set(rng, 12, 30);
        for (const Decomposition& d : decompose_set(a)) {
            CHECK(d.left.size() >= 2);
            CHECK(d.right.size() >= 2);
            CHECK(d.left.size() * d.right.size() == a.size());
            CHECK(d.left.contains(*a.min_positive()));
            CHECK(poly_identity_check(a, d.left, d.right));
            // dilations of a split are splits of the dilation
            DigitSet scaled = a.dilated(3);
            CHECK(poly_identity_check(scaled, d.left.dilated(3), d.right.dilated(3)));
        }
    }
}

TEST_CASE("property: interval uniqueness at prime squares, via the cyclotomic oracle") {
    for (int n = 2; n <= 36; ++n) {
        std::vector<Decomposition> got = interval_decompositions(n);
        std::vector<Decomposition> expect = oracles::interval_decompositions_oracle(n);
        CHECK(got == expect);
        bool prime_square = (n == 4 || n == 9 || n == 25);
        CHECK((got.size() == 1) == prime_square);
    }
}

TEST_CASE("lemma uniqueness: only a*[0,b) completes [0,a) to [0,ab)") {
    for (long a = 1; a <= 5; ++a) {
        for (long b = 1; b <= 5; ++b) {
            long ab = a * b;
            DigitSet left = DigitSet::interval(a);
            DigitSet expect = solve_ax_interval(a, b);
            int solutions = 0;
            // every subset of [0, ab) of size b containing 0
            std::vector<int> pick(static_cast<std::size_t>(b));
            std::function<void(long, int)> choose = [&](long from, int taken) {
                if (taken == b) {
                    std::vector<Int> elems;
                    for (int i = 0; i < b; ++i) elems.push_back(Int(pick[static_cast<std::size_t>(i)]));
                    DigitSet x = DigitSet::from_sorted(std::move(elems));
                    if (is_direct_sum(left, x) && left.sumset_with(x) == DigitSet::interval(ab)) {
                        solutions += 1;
                        CHECK(x == expect);
                    }
                    return;
                }
                for (long v = from; v < ab; ++v) {
                    pick[static_cast<std::size_t>(taken)] = static_cast<int>(v);
                    choose(v + 1, taken + 1);
                }
            };
            pick[0] = 0;
            choose(1, 1);
            CHECK(solutions == 1);
        }
    }
}

TEST_CASE("classify systems by their blocks") {
    RadixSeq primes({Int(2), Int(3), Int(5), Int(7)}, RadixSeq::Tail::Finite);
    CHECK_FALSE(classify_system(bns_from_radices(primes, 4), 4).has_value());

    auto quat = classify_system(bns_from_radices(RadixSeq({Int(4)}, RadixSeq::Tail::RepeatLast), 1), 1);
    REQUIRE(quat.has_value());
    CHECK(quat->index == 1);
    CHECK(quat->witness.left.elements() == ints({0, 1}));
    CHECK(quat->witness.right.elements() == ints({0, 2}));

    auto mixed = classify_system(bns_from_radices(RadixSeq({Int(2), Int(2), Int(6)}, RadixSeq::Tail::Finite), 3), 3);
    REQUIRE(mixed.has_value());
    CHECK(mixed->index == 3);
    DigitSet block = digits({0, 4, 8, 12, 16, 20});
    CHECK(mixed->witness.left.sumset_with(mixed->witness.right) == block);
    CHECK(poly_identity_check(block, mixed->witness.left, mixed->witness.right));

    CHECK_THROWS_WITH_AS(classify_system(bns_from_radices(primes, 4), 5),
                         doctest::Contains("InfiniteSetInPrefix"), Error);
}

TEST_CASE("splitting a set inside a system keeps it additive") {
    AdditiveSystem quat = bns_from_radices(RadixSeq({Int(4)}, RadixSeq::Tail::RepeatLast), 2);
    Decomposition d{digits({0, 1}), digits({0, 2})};
    AdditiveSystem split = decompose_system(quat, 1, d, 16);
    CHECK(split.explicit_count() == 4);
    CHECK(split.set_at(1).elements_below(10) == ints({0, 1}));
    CHECK(split.set_at(2).elements_below(10) == ints({0, 2}));
    CHECK(split.set_at(3).elements_below(20) == ints({0, 4, 8, 12}));
    CHECK(split.claimed_bound() == 16);

    AdditiveSystem six({SetExpr::interval(6), SetExpr::ray(6)});
    AdditiveSystem parts = decompose_system(six, 1, Decomposition{digits({0, 1}), digits({0, 2, 4})}, 30);
    CHECK(verify_additive(parts, 30).ok());

    CHECK_THROWS_WITH_AS(decompose_system(quat, 1, Decomposition{digits({0, 1}), digits({0, 3})}, 16),
                         doctest::Contains("NotAValidDecomposition"), Error);
}

TEST_CASE("prime refinement of radix sequences") {
    PrimeRefinement r44 = refine_to_prime_radices(RadixSeq({Int(4), Int(4)}, RadixSeq::Tail::Finite));
    CHECK(r44.refined.prefix() == ints({2, 2, 2, 2}));
    CHECK(r44.grouping == Partition({{1, 2}, {3, 4}}));

    PrimeRefinement already = refine_to_prime_radices(RadixSeq({Int(2), Int(3), Int(5)}, RadixSeq::Tail::Finite));
    CHECK(already.refined.prefix() == ints({2, 3, 5}));
    CHECK(already.grouping == Partition({{1}, {2}, {3}}));

    PrimeRefinement mixed = refine_to_prime_radices(RadixSeq({Int(12), Int(2)}, RadixSeq::Tail::Finite));
    CHECK(mixed.refined.prefix() == ints({2, 2, 3, 2}));
    CHECK(mixed.grouping == Partition({{1, 2, 3}, {4}}));

    // repeating prime-power tails refine; repeating mixed composites cannot
    PrimeRefinement quad = refine_to_prime_radices(RadixSeq({Int(4)}, RadixSeq::Tail::RepeatLast));
    CHECK(quad.refined.prefix() == ints({2, 2}));
    CHECK(quad.refined.repeats());
    CHECK_THROWS_WITH_AS(refine_to_prime_radices(RadixSeq({Int(6)}, RadixSeq::Tail::RepeatLast)),
                         doctest::Contains("NotRepresentable"), Error);
}

TEST_CASE("property: refinement round-trips through contraction") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        RadixSeq original = oracles::random_radices(rng, 4, 2, 12);
        PrimeRefinement refinement = refine_to_prime_radices(original);
        for (const Int& g : refinement.refined.prefix()) CHECK(is_prime(g));

        int refined_len = refinement.refined.prefix_length();
        Int g4 = original.product(4);
        std::uint64_t bound = std::min<std::uint64_t>(to_u64(g4, "G4"), 4000);
        AdditiveSystem back =
            contract(bns_from_radices(refinement.refined, refined_len), refinement.grouping, bound);
        AdditiveSystem direct = bns_from_radices(original, 4);
        for (int i = 1; i <= 4; ++i) {
            CHECK(back.set_at(i).elements_below(g4) == direct.set_at(i).elements_below(g4));
        }
    }
}
