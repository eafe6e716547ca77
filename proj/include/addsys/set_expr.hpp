#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addsys/digit_set.hpp"
#include "addsys/index_set.hpp"
#include "addsys/integer.hpp"
#include "addsys/radix_seq.hpp"

namespace addsys {

/// A symbolic set of nonnegative integers containing 0.  Four forms:
///
///   Explicit   - a finite DigitSet
///   Ray        - m*N0 = {0, m, 2m, ...}, the canonical infinite tail
///   Dilated    - d*X for another expression X
///   BnsSubsum  - the direct sum of a chosen subfamily of the blocks
///                G_{j-1}*[0,g_j) of a radix sequence; equivalently all
///                integers whose mixed-radix digits vanish outside the
///                chosen index set
///
/// Values are immutable.  Infinite sets are never materialized: every
/// consumer works through `elements_below` with an explicit bound.
class SetExpr {
  public:
    struct Explicit {
        DigitSet set;
    };
    struct Ray {
        Int modulus;  // >= 1
    };
    struct Dilated {
        Int factor;  // >= 1
        std::shared_ptr<const SetExpr> inner;
    };
    struct BnsSubsum {
        RadixSeq radices;
        IndexSet indices;
    };
    using Node = std::variant<Explicit, Ray, Dilated, BnsSubsum>;

    static SetExpr explicit_set(DigitSet set);
    static SetExpr interval(const Int& n) { return explicit_set(DigitSet::interval(n)); }
    static SetExpr ray(Int modulus);
    static SetExpr dilated_node(Int factor, SetExpr inner);
    static SetExpr bns_subsum(RadixSeq radices, IndexSet indices);

    const Node& node() const { return *node_; }

    bool is_finite() const;
    bool contains(const Int& value) const;

    /// Smallest nonzero member; empty iff the expression denotes {0}.
    std::optional<Int> min_positive() const;

    bool denotes_zero_only() const { return !min_positive().has_value(); }

    /// All members strictly below `bound`, sorted ascending.
    std::vector<Int> elements_below(const Int& bound) const;

    /// d*X with the canonical simplifications: explicit sets multiply
    /// through, rays scale their modulus, nested dilations merge.
    SetExpr dilate(const Int& d) const;

    /// X/g when every member is divisible by g; empty otherwise (also
    /// empty for shapes this representation cannot divide symbolically).
    std::optional<SetExpr> divided_exact(const Int& g) const;

    std::optional<DigitSet> as_digit_set() const;

    /// Recognizes m*N0 through dilation wrappers.
    std::optional<Int> as_ray_modulus() const;

    std::string to_string() const;

    bool operator==(const SetExpr& other) const;
    bool operator!=(const SetExpr& other) const { return !(*this == other); }

  private:
    explicit SetExpr(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

    std::shared_ptr<const Node> node_;
};

/// All pairwise sums a+b < bound of members of the two sets, sorted and
/// deduplicated.  Sound for infinite operands: a sum below the bound only
/// draws on members below the bound.
std::vector<Int> sumset(const SetExpr& a, const SetExpr& b, const Int& bound);

}  // namespace addsys
