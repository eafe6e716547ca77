#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "addsys/partition.hpp"
#include "addsys/radix_seq.hpp"
#include "addsys/system.hpp"
#include "addsys/verify.hpp"

namespace addsys {

/// The number system of a radix sequence, materialized to `depth` blocks:
/// A_i = G_{i-1} * [0, g_i) for i <= depth, closed by the ray G_depth*N0
/// that the remaining blocks sum to.
AdditiveSystem bns_from_radices(const RadixSeq& radices, int depth);

/// Sum the sets of `system` over the parts of `p` (indices not covered by
/// an explicit part stay untouched).  The output is re-indexed by least
/// positive element, verified up to `bound`, and stamped.  Verification
/// failing means the input was not additive below the bound.
AdditiveSystem contract(const AdditiveSystem& system, const Partition& p, std::uint64_t bound,
                        Exec exec = Exec::Auto);

/// Prepend the block [0, g) and dilate every existing set by g.  A system
/// verified to N yields a dilation verified to g*N, so the stamp scales.
AdditiveSystem dilate_system(const AdditiveSystem& system, const Int& g);

/// Iterated dilation: (g_1, ..., g_n) * A = g_1 * ((g_2, ..., g_n) * A).
AdditiveSystem dilate_by_sequence(const AdditiveSystem& system, const std::vector<Int>& radices);

/// True iff every explicit part is a run of consecutive integers.
bool is_interval_partition(const Partition& p);

/// The radix sequence whose number system equals the contraction of the
/// system of `h` by the interval partition `p`: g_i = H_{u_i}/H_{u_{i-1}}
/// over the part endpoints u_i, continuing with h past the covered prefix.
RadixSeq contracted_bns_radices(const RadixSeq& h, const Partition& p);

/// Window-stabilized approximation of the limit of a system sequence.
struct StabilizedLimit {
    std::vector<SetExpr> sets;
    int window_begin = 0;
    int window_end = 0;
    Int bound;
};

/// Sets of the last system that already appear, compared as element
/// sequences below `bound`, in every window member.  A set counts as
/// appearing in a system when it equals one of its finite members or is
/// contained in one of its infinite members (the unexpanded remainder a
/// later dilation step will refine).  Sets indistinguishable from {0}
/// below the bound are dropped.  An exact limit is not computable from
/// finitely many terms; the window fraction trades confidence for work.
StabilizedLimit stabilized_limit(const std::function<AdditiveSystem(int)>& family, int n_max,
                                 const Int& bound, double window_fraction = 0.5);

}  // namespace addsys
