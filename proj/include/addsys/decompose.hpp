#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addsys/digit_set.hpp"
#include "addsys/partition.hpp"
#include "addsys/radix_seq.hpp"
#include "addsys/system.hpp"

namespace addsys {

/// A direct-sum factorization A = left (+) right with both factors of
/// size >= 2, both containing 0, oriented so the smallest positive
/// element of the sum lies in `left`.
struct Decomposition {
    DigitSet left;
    DigitSet right;

    bool operator==(const Decomposition& other) const = default;
    bool operator<(const Decomposition& other) const {
        if (left == other.left) return right < other.right;
        return left < other.left;
    }
};

/// A radix sequence refined to primes, with the grouping that maps each
/// run of primes back to the original entry it factors.
struct PrimeRefinement {
    RadixSeq refined;
    Partition grouping;
};

/// Verdict of classify_system when some inspected set decomposes.
struct Classification {
    int index;
    Decomposition witness;
};

/// The unique X with [0, a*b) = [0, a) (+) X, namely a*[0, b).
DigitSet solve_ax_interval(const Int& a, const Int& b);

/// Generating-polynomial identity: true iff poly(b) * poly(c) has every
/// coefficient in {0,1} and equals poly(a).  An independent route to
/// a = b (+) c.
bool poly_identity_check(const DigitSet& a, const DigitSet& b, const DigitSet& c);

/// All direct-sum factorizations of `a` in canonical orientation, sorted
/// by left factor.  Backtracking over which side each forced element
/// joins, pruned by closure under partial sums; accepted pairs are
/// validated by the polynomial identity.
std::vector<Decomposition> decompose_set(const DigitSet& a);

/// Exhaustive reference: scan every subset of `a` containing 0 and the
/// least positive element as a left-factor candidate, and grow the
/// right factor greedily.  Capped because the scan is 2^|a|.
std::vector<Decomposition> decompose_set_bruteforce(const DigitSet& a, std::size_t cap = 16);

/// Empty decomposition list, with a prime-cardinality shortcut.
bool is_indecomposable_set(const DigitSet& a);

/// Decompositions of the interval [0, n); the count is 1 exactly for
/// squares of primes.
std::vector<Decomposition> interval_decompositions(const Int& n);

/// Inspect the first `depth` sets; empty result means all of them are
/// indecomposable, otherwise the first decomposable index with a
/// witness.  For a radix-built system this is primality of each radix.
std::optional<Classification> classify_system(const AdditiveSystem& system, int depth);

/// Replace set `index` by the two factors of `d` (which must recompose
/// it exactly); the result is re-verified up to `bound`.
AdditiveSystem decompose_system(const AdditiveSystem& system, int index, const Decomposition& d,
                                std::uint64_t bound);

/// Factor every radix into nondecreasing primes; the grouping contracts
/// the refined system back onto the original blockwise.
PrimeRefinement refine_to_prime_radices(const RadixSeq& radices);

}  // namespace addsys
