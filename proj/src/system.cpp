#include "addsys/system.hpp"

#include <string>

namespace addsys {

AdditiveSystem::AdditiveSystem(std::vector<SetExpr> sets, std::optional<RadixSeq> tail)
    : sets_(std::move(sets)), tail_(std::move(tail)) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].denotes_zero_only()) {
            raise(errc::structure_violation,
                  "set " + std::to_string(i + 1) + " has fewer than 2 elements");
        }
    }
    if (sets_.empty() && !tail_) {
        raise(errc::structure_violation, "a system needs at least one set");
    }
}

AdditiveSystem AdditiveSystem::trivial() { return AdditiveSystem({SetExpr::ray(1)}); }

bool AdditiveSystem::has_set(int index) const {
    if (index < 1) return false;
    if (index <= explicit_count()) return true;
    return tail_ && tail_->has_radix(index);
}

SetExpr AdditiveSystem::set_at(int index) const {
    if (index >= 1 && index <= explicit_count()) return sets_[static_cast<std::size_t>(index - 1)];
    if (has_set(index)) return SetExpr::explicit_set(tail_->block(index));
    raise(errc::index_out_of_range, "no set at index " + std::to_string(index));
}

bool AdditiveSystem::family_size_at_least(int count) const {
    if (explicit_count() >= count) return true;
    return has_set(count);
}

std::vector<std::pair<int, SetExpr>> AdditiveSystem::relevant_sets(const Int& bound) const {
    std::vector<std::pair<int, SetExpr>> out;
    for (int i = 1; i <= explicit_count(); ++i) {
        auto mp = sets_[static_cast<std::size_t>(i - 1)].min_positive();
        if (mp && *mp < bound) out.emplace_back(i, sets_[static_cast<std::size_t>(i - 1)]);
    }
    if (tail_) {
        for (int i = explicit_count() + 1; tail_->has_radix(i); ++i) {
            if (tail_->product(i - 1) >= bound) break;
            out.emplace_back(i, SetExpr::explicit_set(tail_->block(i)));
        }
    }
    return out;
}

AdditiveSystem AdditiveSystem::materialized_below(const Int& bound) const {
    if (!tail_) return *this;
    std::vector<SetExpr> sets = sets_;
    int i = explicit_count() + 1;
    for (; tail_->has_radix(i) && tail_->product(i - 1) < bound; ++i) {
        sets.push_back(SetExpr::explicit_set(tail_->block(i)));
    }
    if (tail_->has_radix(i)) {
        // The remaining blocks sum to R_{i-1}*N0 with one representation
        // per multiple, so the swap preserves all counts.
        sets.push_back(SetExpr::ray(tail_->product(i - 1)));
    }
    AdditiveSystem out(std::move(sets));
    out.claimed_bound_ = claimed_bound_;
    return out;
}

AdditiveSystem AdditiveSystem::with_claimed_bound(std::uint64_t bound) const {
    AdditiveSystem out = *this;
    out.claimed_bound_ = bound;
    return out;
}

Assignment::Assignment(std::map<int, Int> parts) : parts_(std::move(parts)) {
    for (auto it = parts_.begin(); it != parts_.end();) {
        if (it->first < 1) raise(errc::index_out_of_range, "assignment index " + std::to_string(it->first));
        if (it->second == 0) {
            it = parts_.erase(it);
        } else {
            ++it;
        }
    }
}

Int Assignment::sum() const {
    Int total = 0;
    for (const auto& [index, value] : parts_) total += value;
    return total;
}

AdditiveSystem PeelResult::residual_system() const {
    std::vector<SetExpr> sets;
    for (std::size_t j = 0; j < peeled.size(); ++j) {
        if (dilation_case && static_cast<int>(j + 1) == i1) continue;
        sets.push_back(peeled[j]);
    }
    return AdditiveSystem(std::move(sets));
}

}  // namespace addsys
