#pragma once

#include <cstdint>
#include <optional>

#include "addsys/count_kernel.hpp"
#include "addsys/system.hpp"

namespace addsys {

using kernel::Exec;

struct VerifyOutcome {
    std::optional<CounterExample> counterexample;  // empty means verified
    AdditiveSystem system;                         // claimed bound raised on success

    bool ok() const { return !counterexample.has_value(); }
};

/// Decide whether every n in [0, bound) has exactly one representation.
/// On failure reports the least offending n with its exact count and up
/// to two witness assignments.
VerifyOutcome verify_additive(const AdditiveSystem& system, std::uint64_t bound,
                              Exec exec = Exec::Auto);

/// Exact number of representations of n (unsaturated, arbitrary size).
Int count_representations(const AdditiveSystem& system, const Int& n);

/// Up to `limit` distinct representations of n, in deterministic order.
std::vector<Assignment> enumerate_representations(const AdditiveSystem& system, const Int& n,
                                                  std::size_t limit);

/// The unique representation of n in a system verified past n.
/// Greedy largest-block-first, falling back to table backtracking.
Assignment encode(const AdditiveSystem& system, const Int& n);

/// Sum of an assignment after membership validation.
Int decode(const AdditiveSystem& system, const Assignment& assignment);

/// Extract (i1, g) and the residual family per the peel construction:
/// i1 indexes the set containing 1, g is the least positive integer
/// missing from it, and the result satisfies A_{i1} = [0,g) (+) g*B_{i1},
/// A_i = g*B_i.  The identities are rechecked below `bound`; failure
/// means the input was not an additive system.
PeelResult peel(const AdditiveSystem& system, std::uint64_t bound);

}  // namespace addsys
