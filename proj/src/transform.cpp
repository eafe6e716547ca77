#include "addsys/transform.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace addsys {

namespace {

std::uint64_t scaled_claim(std::uint64_t claimed, const Int& factor) {
    Int scaled = Int(static_cast<unsigned long>(claimed)) * factor;
    if (!fits_u64(scaled)) return std::numeric_limits<std::uint64_t>::max();
    return scaled.get_ui();
}

// Regroup the first `take` entries of `radices` into exactly `groups`
// factors >= 2 with the same product, then continue with the untouched
// entries.  Keeps a radix tail meaningful after the explicit prefix of a
// system changes length.
RadixSeq rebased_tail(const RadixSeq& radices, int take, int groups) {
    assert(groups >= 1 && groups <= take);
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(groups) +
                   static_cast<std::size_t>(std::max(0, radices.prefix_length() - take)));
    Int head = 1;
    for (int i = 1; i <= take - groups + 1; ++i) head *= radices.radix(i);
    prefix.push_back(head);
    for (int i = take - groups + 2; i <= take; ++i) prefix.push_back(radices.radix(i));
    for (int i = take + 1; i <= radices.prefix_length(); ++i) prefix.push_back(radices.radix(i));
    return RadixSeq(std::move(prefix), radices.tail());
}

SetExpr contracted_part(const AdditiveSystem& system, const std::vector<int>& part) {
    if (part.size() == 1) return system.set_at(part.front());

    std::vector<DigitSet> finite;
    std::optional<Int> ray_modulus;
    for (int index : part) {
        SetExpr set = system.set_at(index);
        if (auto ds = set.as_digit_set()) {
            finite.push_back(std::move(*ds));
        } else if (auto m = set.as_ray_modulus()) {
            if (ray_modulus) {
                raise(errc::not_representable, "part sums two infinite sets");
            }
            ray_modulus = *m;
        } else {
            raise(errc::not_representable,
                  "part sums a set of shape " + set.to_string() + " symbolically");
        }
    }
    DigitSet sum = DigitSet::zero();
    for (const DigitSet& ds : finite) sum = sum.sumset_with(ds);
    if (!ray_modulus) return SetExpr::explicit_set(std::move(sum));

    // F (+) M*N0 collapses to a ray d*N0 exactly when F = d*[0, M/d).
    const Int& m = *ray_modulus;
    Int width(static_cast<unsigned long>(sum.size()));
    if (m % width == 0) {
        Int d = m / width;
        if (sum == DigitSet::interval(width).dilated(d)) return SetExpr::ray(d);
    }
    raise(errc::not_representable,
          "summing finite sets into the ray " + m.get_str() + "*N0 leaves no closed form");
}

}  // namespace

AdditiveSystem bns_from_radices(const RadixSeq& radices, int depth) {
    if (depth < 1) raise(errc::bad_document, "depth must be positive");
    if (!radices.has_radix(depth)) {
        raise(errc::depth_exceeds_finite_radices,
              "depth " + std::to_string(depth) + " exceeds the radix sequence");
    }
    std::vector<SetExpr> sets;
    sets.reserve(static_cast<std::size_t>(depth) + 1);
    for (int i = 1; i <= depth; ++i) sets.push_back(SetExpr::explicit_set(radices.block(i)));
    sets.push_back(SetExpr::ray(radices.product(depth)));
    return AdditiveSystem(std::move(sets));
}

AdditiveSystem contract(const AdditiveSystem& system, const Partition& p, std::uint64_t bound,
                        Exec exec) {
    int m = p.max_covered();
    AdditiveSystem work = system;

    // Bring every partitioned index into the explicit prefix; the radix
    // tail addresses absolute family positions, so it survives unchanged.
    if (work.has_tail() && m > work.explicit_count()) {
        std::vector<SetExpr> sets = work.explicit_sets();
        for (int i = work.explicit_count() + 1; i <= m; ++i) {
            if (!work.tail().has_radix(i)) break;
            sets.push_back(SetExpr::explicit_set(work.tail().block(i)));
        }
        work = AdditiveSystem(std::move(sets), work.tail());
    }
    if (m > work.explicit_count()) {
        raise(errc::index_out_of_range,
              "partition covers index " + std::to_string(m) + " but the family has " +
                  std::to_string(work.explicit_count()) + " addressable sets");
    }

    int k = work.explicit_count();
    std::vector<SetExpr> produced;
    for (const auto& part : p.parts()) produced.push_back(contracted_part(work, part));
    for (int i = m + 1; i <= k; ++i) produced.push_back(work.set_at(i));

    std::sort(produced.begin(), produced.end(), [](const SetExpr& a, const SetExpr& b) {
        return *a.min_positive() < *b.min_positive();
    });

    std::optional<RadixSeq> tail;
    if (work.has_tail()) {
        tail = produced.empty() ? work.tail()
                                : rebased_tail(work.tail(), k, static_cast<int>(produced.size()));
    }

    AdditiveSystem result(std::move(produced), std::move(tail));
    VerifyOutcome outcome = verify_additive(result, bound, exec);
    if (!outcome.ok()) {
        raise(errc::structure_violation,
              "contraction is not additive below " + std::to_string(bound) + ": counterexample at n = " +
                  outcome.counterexample->n.get_str() + " (the input system was not additive)");
    }
    return outcome.system;
}

AdditiveSystem dilate_system(const AdditiveSystem& system, const Int& g) {
    if (g < 2) raise(errc::bad_document, "dilation needs g >= 2");
    std::vector<SetExpr> sets;
    sets.reserve(static_cast<std::size_t>(system.explicit_count()) + 1);
    sets.push_back(SetExpr::interval(g));
    for (const SetExpr& set : system.explicit_sets()) sets.push_back(set.dilate(g));
    std::optional<RadixSeq> tail;
    if (system.has_tail()) tail = system.tail().prepended(g);
    AdditiveSystem out(std::move(sets), std::move(tail));
    return out.with_claimed_bound(scaled_claim(system.claimed_bound(), g));
}

AdditiveSystem dilate_by_sequence(const AdditiveSystem& system, const std::vector<Int>& radices) {
    AdditiveSystem out = system;
    for (auto it = radices.rbegin(); it != radices.rend(); ++it) {
        out = dilate_system(out, *it);
    }
    return out;
}

bool is_interval_partition(const Partition& p) { return p.is_interval(); }

RadixSeq contracted_bns_radices(const RadixSeq& h, const Partition& p) {
    if (!p.is_interval()) {
        raise(errc::not_interval_partition, "the contraction of a number system stays one only "
                                            "for interval partitions");
    }
    int m = p.max_covered();
    if (m == 0) return h;
    if (!h.has_radix(m)) {
        raise(errc::depth_exceeds_finite_radices,
              "partition covers index " + std::to_string(m) + " beyond the radix sequence");
    }
    std::vector<Int> prefix;
    Int below = 1;  // H_{u_{i-1}}
    for (const auto& part : p.parts()) {
        Int at = h.product(part.back());  // H_{u_i}
        prefix.push_back(at / below);
        below = at;
    }
    for (int i = m + 1; i <= h.prefix_length(); ++i) prefix.push_back(h.radix(i));
    if (h.repeats() && m >= h.prefix_length()) prefix.push_back(h.radix(m + 1));
    return RadixSeq(std::move(prefix), h.tail());
}

StabilizedLimit stabilized_limit(const std::function<AdditiveSystem(int)>& family, int n_max,
                                 const Int& bound, double window_fraction) {
    if (n_max < 1) raise(errc::bad_document, "n_max must be positive");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        raise(errc::bad_document, "window fraction must be in (0, 1]");
    }
    int begin = std::max(1, static_cast<int>(std::floor(n_max * window_fraction)));

    struct Member {
        std::vector<Int> elems;
        bool infinite = false;
    };
    auto snapshot = [&](int n) {
        std::vector<Member> members;
        AdditiveSystem sys = family(n).materialized_below(bound);
        for (const SetExpr& set : sys.explicit_sets()) {
            Member m{set.elements_below(bound), !set.is_finite()};
            if (m.elems.size() >= 2) members.push_back(std::move(m));
        }
        return members;
    };

    AdditiveSystem last = family(n_max).materialized_below(bound);
    std::vector<SetExpr> candidates;
    for (const SetExpr& set : last.explicit_sets()) {
        if (set.elements_below(bound).size() >= 2) candidates.push_back(set);
    }

    std::vector<bool> keep(candidates.size(), true);
    for (int n = begin; n < n_max; ++n) {
        std::vector<Member> members = snapshot(n);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!keep[c]) continue;
            std::vector<Int> elems = candidates[c].elements_below(bound);
            bool present = false;
            for (const Member& member : members) {
                if (member.infinite
                        ? std::includes(member.elems.begin(), member.elems.end(), elems.begin(),
                                        elems.end())
                        : member.elems == elems) {
                    present = true;
                    break;
                }
            }
            if (!present) keep[c] = false;
        }
    }

    StabilizedLimit out;
    out.window_begin = begin;
    out.window_end = n_max;
    out.bound = bound;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (keep[c]) out.sets.push_back(candidates[c]);
    }
    std::sort(out.sets.begin(), out.sets.end(), [](const SetExpr& a, const SetExpr& b) {
        return *a.min_positive() < *b.min_positive();
    });
    return out;
}

}  // namespace addsys
