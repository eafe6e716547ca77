#pragma once

#include <optional>
#include <vector>

#include "addsys/integer.hpp"

namespace addsys {

/// A finite set of nonnegative integers containing 0, stored strictly
/// increasing.  This is the working representation for finite digit sets:
/// the blocks of a number system, sumset factors, peel residues.
///
/// The singleton {0} is a legal value here; the "at least two elements"
/// rule applies to whole systems, not to individual sets.
class DigitSet {
  public:
    /// Sort, deduplicate and validate raw input.  Rejects negative
    /// elements and input without 0.
    static DigitSet normalized(std::vector<Int> raw);

    /// The interval [0, n) for n >= 1.
    static DigitSet interval(const Int& n);

    /// Adopt an already strictly-increasing sequence starting at 0.
    static DigitSet from_sorted(std::vector<Int> sorted);

    static DigitSet zero() { return from_sorted({Int(0)}); }

    std::size_t size() const { return elems_.size(); }
    const std::vector<Int>& elements() const { return elems_; }
    const Int& max() const { return elems_.back(); }

    bool contains(const Int& value) const;

    /// Smallest nonzero element; empty for the singleton {0}.
    std::optional<Int> min_positive() const;

    bool is_singleton_zero() const { return elems_.size() == 1; }

    /// True when the set is 0, m, 2m, ..., (q-1)m for its smallest
    /// positive element m, i.e. m*[0,q).  Every block of a British
    /// number system has this shape; contractions by non-interval
    /// partitions break it.
    bool is_consecutive_multiples() const;

    DigitSet dilated(const Int& factor) const;

    /// Divide every element by g; empty if some element is not divisible.
    std::optional<DigitSet> divided_exact(const Int& g) const;

    /// Keep the elements divisible by g and divide them by g.
    DigitSet multiples_divided(const Int& g) const;

    /// Exact (unbounded) sumset with another finite set.
    DigitSet sumset_with(const DigitSet& other) const;

    /// Greatest common divisor of the nonzero elements (1 for {0}).
    Int element_gcd() const;

    bool operator==(const DigitSet& other) const = default;

    /// Lexicographic order on the element sequence, for canonical output.
    bool operator<(const DigitSet& other) const { return elems_ < other.elems_; }

  private:
    explicit DigitSet(std::vector<Int> elems) : elems_(std::move(elems)) {}

    std::vector<Int> elems_;
};

/// True iff all |a|*|b| pairwise sums are distinct.
bool is_direct_sum(const DigitSet& a, const DigitSet& b);

}  // namespace addsys
