#pragma once

#include <algorithm>
#include <vector>

#include "addsys/errors.hpp"

namespace addsys {

/// A decidable set of positive indices: an explicit sorted list inside a
/// finite window, plus a flag saying whether everything past the window
/// belongs.  This is how infinite index families (e.g. "all blocks from
/// some point on") stay serializable.
class IndexSet {
  public:
    IndexSet(std::vector<int> included, int window, bool tail_included)
        : included_(std::move(included)), window_(window), tail_included_(tail_included) {
        std::sort(included_.begin(), included_.end());
        included_.erase(std::unique(included_.begin(), included_.end()), included_.end());
        if (window_ < 0) raise(errc::bad_document, "index window must be nonnegative");
        for (int i : included_) {
            if (i < 1 || i > window_) {
                raise(errc::bad_document,
                      "index " + std::to_string(i) + " outside window [1, " + std::to_string(window_) + "]");
            }
        }
    }

    static IndexSet finite(std::vector<int> indices) {
        int window = indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
        return IndexSet(std::move(indices), window, false);
    }

    bool contains(int index) const {
        if (index > window_) return tail_included_;
        return std::binary_search(included_.begin(), included_.end(), index);
    }

    bool is_finite() const { return !tail_included_; }
    bool empty() const { return included_.empty() && !tail_included_; }

    const std::vector<int>& included() const { return included_; }
    int window() const { return window_; }
    bool tail_included() const { return tail_included_; }

    /// Smallest member, or 0 when empty.
    int min_index() const {
        if (!included_.empty()) return included_.front();
        return tail_included_ ? window_ + 1 : 0;
    }

    /// The set shifted down by `offset` (members <= offset are dropped).
    IndexSet shifted_down(int offset) const {
        std::vector<int> inc;
        for (int i : included_) {
            if (i > offset) inc.push_back(i - offset);
        }
        return IndexSet(std::move(inc), std::max(0, window_ - offset), tail_included_);
    }

    bool operator==(const IndexSet& other) const = default;

  private:
    std::vector<int> included_;
    int window_;
    bool tail_included_;
};

}  // namespace addsys
