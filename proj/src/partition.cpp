#include "addsys/partition.hpp"

#include <algorithm>
#include <string>

namespace addsys {

Partition::Partition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
    for (auto& part : parts_) {
        if (part.empty()) raise(errc::invalid_partition, "empty part");
        std::sort(part.begin(), part.end());
        if (part.front() < 1) raise(errc::invalid_partition, "indices start at 1");
        max_covered_ = std::max(max_covered_, part.back());
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<bool> seen(static_cast<std::size_t>(max_covered_) + 1, false);
    for (const auto& part : parts_) {
        for (int i : part) {
            if (seen[static_cast<std::size_t>(i)]) {
                raise(errc::overlapping_parts, "index " + std::to_string(i) + " appears twice");
            }
            seen[static_cast<std::size_t>(i)] = true;
        }
    }
    for (int i = 1; i <= max_covered_; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            raise(errc::invalid_partition,
                  "parts must cover [1, " + std::to_string(max_covered_) + "]; index " + std::to_string(i) +
                      " is missing");
        }
    }
}

bool Partition::is_interval() const {
    for (const auto& part : parts_) {
        for (std::size_t k = 1; k < part.size(); ++k) {
            if (part[k] != part[k - 1] + 1) return false;
        }
    }
    return true;
}

}  // namespace addsys
