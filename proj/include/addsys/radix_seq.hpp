#pragma once

#include <vector>

#include "addsys/digit_set.hpp"
#include "addsys/integer.hpp"

namespace addsys {

/// A radix sequence (g_i), g_i >= 2, with derived products G_0 = 1,
/// G_i = g_1 * ... * g_i.  Defines a British number system whose i-th
/// block is G_{i-1} * [0, g_i).
///
/// `tail` controls extension beyond the stored prefix: Finite stops,
/// RepeatLast repeats the final entry forever.
class RadixSeq {
  public:
    enum class Tail { Finite, RepeatLast };

    RadixSeq(std::vector<Int> prefix, Tail tail);

    const std::vector<Int>& prefix() const { return prefix_; }
    Tail tail() const { return tail_; }
    bool repeats() const { return tail_ == Tail::RepeatLast; }
    int prefix_length() const { return static_cast<int>(prefix_.size()); }

    /// Whether g_i is defined (1-based).
    bool has_radix(int i) const;

    /// g_i, 1-based; throws DepthExceedsFiniteRadices past a finite end.
    const Int& radix(int i) const;

    /// G_i = product of the first i radices (G_0 = 1).
    Int product(int i) const;

    /// The i-th block G_{i-1} * [0, g_i).
    DigitSet block(int i) const;

    /// Same sequence shifted left by `count` entries: (g_{count+1}, ...).
    RadixSeq dropped_prefix(int count) const;

    /// Sequence with `value` prepended.
    RadixSeq prepended(const Int& value) const;

    bool operator==(const RadixSeq& other) const = default;

  private:
    std::vector<Int> prefix_;
    Tail tail_;
};

}  // namespace addsys
