#include "addsys/radix_seq.hpp"

#include <cassert>

namespace addsys {

RadixSeq::RadixSeq(std::vector<Int> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {
    if (tail_ == Tail::RepeatLast && prefix_.empty()) {
        raise(errc::bad_document, "a repeating radix sequence needs at least one entry");
    }
    for (const Int& g : prefix_) {
        if (g < 2) {
            raise(errc::bad_document, "radices must be >= 2, got " + g.get_str());
        }
    }
}

bool RadixSeq::has_radix(int i) const {
    assert(i >= 1);
    return i <= prefix_length() || tail_ == Tail::RepeatLast;
}

const Int& RadixSeq::radix(int i) const {
    assert(i >= 1);
    if (i <= prefix_length()) return prefix_[static_cast<std::size_t>(i - 1)];
    if (tail_ == Tail::RepeatLast) return prefix_.back();
    raise(errc::depth_exceeds_finite_radices,
          "radix " + std::to_string(i) + " requested from a finite sequence of length " +
              std::to_string(prefix_length()));
}

Int RadixSeq::product(int i) const {
    assert(i >= 0);
    Int p = 1;
    for (int j = 1; j <= i; ++j) p *= radix(j);
    return p;
}

DigitSet RadixSeq::block(int i) const {
    return DigitSet::interval(radix(i)).dilated(product(i - 1));
}

RadixSeq RadixSeq::dropped_prefix(int count) const {
    assert(count >= 0);
    if (count >= prefix_length()) {
        if (tail_ != Tail::RepeatLast) return RadixSeq({}, Tail::Finite);
        return RadixSeq({prefix_.back()}, Tail::RepeatLast);
    }
    return RadixSeq(std::vector<Int>(prefix_.begin() + count, prefix_.end()), tail_);
}

RadixSeq RadixSeq::prepended(const Int& value) const {
    std::vector<Int> p;
    p.reserve(prefix_.size() + 1);
    p.push_back(value);
    p.insert(p.end(), prefix_.begin(), prefix_.end());
    return RadixSeq(std::move(p), tail_);
}

}  // namespace addsys
