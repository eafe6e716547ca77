#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "addsys/radix_seq.hpp"
#include "addsys/set_expr.hpp"

namespace addsys {

/// An indexed family of sets claimed to sum directly to N0.
///
/// Indices 1..k address the explicit prefix.  An optional radix sequence
/// extends the family: for i > k the i-th member is the block
/// R_{i-1} * [0, r_i) of that sequence (its first k entries are product
/// bookkeeping only — the explicit prefix shadows those positions).
///
/// `claimed_bound` records how far the additive-system property has been
/// verified; 0 means unverified.  Values are immutable: verification
/// returns a re-stamped copy.
class AdditiveSystem {
  public:
    explicit AdditiveSystem(std::vector<SetExpr> sets, std::optional<RadixSeq> tail = std::nullopt);

    /// The one-member family (N0), the seed for dilation towers.
    static AdditiveSystem trivial();

    int explicit_count() const { return static_cast<int>(sets_.size()); }
    const std::vector<SetExpr>& explicit_sets() const { return sets_; }

    bool has_tail() const { return tail_.has_value(); }
    const RadixSeq& tail() const { return *tail_; }

    /// Whether the family has an i-th member (1-based).
    bool has_set(int index) const;

    /// The i-th member; tail blocks are materialized on demand.
    SetExpr set_at(int index) const;

    /// True when the family has at least `count` members.
    bool family_size_at_least(int count) const;

    /// Members whose smallest positive element is below `bound`, with
    /// their indices.  Only these can contribute to integers below the
    /// bound; the rest are forced to 0.
    std::vector<std::pair<int, SetExpr>> relevant_sets(const Int& bound) const;

    /// An equivalent system with no radix tail: blocks based below
    /// `bound` become explicit and, for a repeating tail, the remainder
    /// collapses to the ray it sums to.  Representation counts are
    /// preserved for every integer, so verification status carries over.
    AdditiveSystem materialized_below(const Int& bound) const;

    std::uint64_t claimed_bound() const { return claimed_bound_; }
    AdditiveSystem with_claimed_bound(std::uint64_t bound) const;

  private:
    std::vector<SetExpr> sets_;
    std::optional<RadixSeq> tail_;
    std::uint64_t claimed_bound_ = 0;
};

/// A finite choice of one nonzero element per participating set; every
/// omitted index contributes 0.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::map<int, Int> parts);

    const std::map<int, Int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Int sum() const;

    bool operator==(const Assignment& other) const = default;

  private:
    std::map<int, Int> parts_;
};

/// Evidence that uniqueness fails at n: either no representation or at
/// least two distinct ones.
struct CounterExample {
    Int n;
    Int count;
    std::vector<Assignment> witnesses;  // up to two
};

/// The output of peeling: index i1 of the set containing 1, the extracted
/// g >= 2, and the residual family (B_i), where
///   A_{i1} = [0,g) (+) g*B_{i1}   and   A_i = g*B_i otherwise.
/// `peeled[j]` corresponds to family index j+1 of the peeled input.
/// When B_{i1} = {0} the input was a plain dilation by g and the residual
/// system drops that singleton.
struct PeelResult {
    int i1 = 0;
    Int g;
    std::vector<SetExpr> peeled;
    bool dilation_case = false;

    /// The residual family as a system (singleton B_{i1} dropped in the
    /// dilation case).
    AdditiveSystem residual_system() const;
};

}  // namespace addsys
