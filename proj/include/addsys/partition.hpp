#pragma once

#include <vector>

#include "addsys/errors.hpp"

namespace addsys {

/// A partition of an index prefix [1, m] into disjoint nonempty parts.
/// Indices above m are implicitly singleton parts, so a finite value
/// describes a partition of all of N.
///
/// Parts are canonicalized: each part sorted, parts ordered by their
/// smallest member.
class Partition {
  public:
    explicit Partition(std::vector<std::vector<int>> parts);

    /// The all-singleton partition (empty prefix; every index a singleton).
    static Partition identity() { return Partition({}); }

    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    /// Largest index mentioned in an explicit part (0 when none).
    int max_covered() const { return max_covered_; }

    /// True iff every explicit part is a run of consecutive integers.
    bool is_interval() const;

    bool operator==(const Partition& other) const = default;

  private:
    std::vector<std::vector<int>> parts_;
    int max_covered_ = 0;
};

}  // namespace addsys
