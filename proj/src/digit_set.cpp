#include "addsys/digit_set.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace addsys {

DigitSet DigitSet::normalized(std::vector<Int> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.empty() || raw.front() != 0) {
        if (!raw.empty() && raw.front() < 0) {
            raise(errc::negative_element, "digit sets contain nonnegative integers only, got " + raw.front().get_str());
        }
        raise(errc::missing_zero, "every digit set must contain 0");
    }
    return DigitSet(std::move(raw));
}

DigitSet DigitSet::interval(const Int& n) {
    assert(n >= 1);
    std::vector<Int> elems;
    elems.reserve(to_index(n, "interval length"));
    for (Int v = 0; v < n; ++v) elems.push_back(v);
    return DigitSet(std::move(elems));
}

DigitSet DigitSet::from_sorted(std::vector<Int> sorted) {
    assert(!sorted.empty() && sorted.front() == 0);
    assert(std::is_sorted(sorted.begin(), sorted.end()));
    return DigitSet(std::move(sorted));
}

bool DigitSet::contains(const Int& value) const {
    return std::binary_search(elems_.begin(), elems_.end(), value);
}

std::optional<Int> DigitSet::min_positive() const {
    if (elems_.size() < 2) return std::nullopt;
    return elems_[1];
}

bool DigitSet::is_consecutive_multiples() const {
    if (elems_.size() < 2) return true;
    const Int& m = elems_[1];
    for (std::size_t i = 2; i < elems_.size(); ++i) {
        if (elems_[i] != m * Int(i)) return false;
    }
    return true;
}

DigitSet DigitSet::dilated(const Int& factor) const {
    assert(factor >= 1);
    std::vector<Int> out;
    out.reserve(elems_.size());
    for (const Int& e : elems_) out.push_back(e * factor);
    return DigitSet(std::move(out));
}

std::optional<DigitSet> DigitSet::divided_exact(const Int& g) const {
    assert(g >= 1);
    std::vector<Int> out;
    out.reserve(elems_.size());
    for (const Int& e : elems_) {
        if (e % g != 0) return std::nullopt;
        out.push_back(e / g);
    }
    return DigitSet(std::move(out));
}

DigitSet DigitSet::multiples_divided(const Int& g) const {
    assert(g >= 1);
    std::vector<Int> out;
    for (const Int& e : elems_) {
        if (e % g == 0) out.push_back(e / g);
    }
    return DigitSet(std::move(out));
}

DigitSet DigitSet::sumset_with(const DigitSet& other) const {
    std::set<Int> sums;
    for (const Int& a : elems_) {
        for (const Int& b : other.elems_) sums.insert(a + b);
    }
    return DigitSet(std::vector<Int>(sums.begin(), sums.end()));
}

Int DigitSet::element_gcd() const {
    Int g = 0;
    for (const Int& e : elems_) g = gcd(g, e);
    return g == 0 ? Int(1) : g;
}

bool is_direct_sum(const DigitSet& a, const DigitSet& b) {
    std::set<Int> sums;
    for (const Int& x : a.elements()) {
        for (const Int& y : b.elements()) {
            if (!sums.insert(x + y).second) return false;
        }
    }
    return true;
}

}  // namespace addsys
