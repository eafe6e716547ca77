#include "addsys/verify.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace addsys {

namespace {

// Least positive integer missing from the set, or empty when the set is
// all of N0 (nothing to extract).
std::optional<Int> least_absent_positive(const SetExpr& set) {
    return std::visit(
        [&](const auto& n) -> std::optional<Int> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SetExpr::Explicit>) {
                const auto& elems = n.set.elements();
                for (std::size_t j = 1; j < elems.size(); ++j) {
                    if (elems[j] != Int(j)) return Int(j);
                }
                return Int(elems.size());
            } else if constexpr (std::is_same_v<T, SetExpr::Ray>) {
                if (n.modulus == 1) return std::nullopt;
                return Int(1);
            } else if constexpr (std::is_same_v<T, SetExpr::Dilated>) {
                if (n.factor == 1) return least_absent_positive(*n.inner);
                return Int(1);
            } else {
                if (!n.indices.contains(1)) return Int(1);
                int run = 1;
                while (n.indices.contains(run + 1)) {
                    if (run + 1 > n.indices.window()) return std::nullopt;  // all of N included
                    ++run;
                }
                return n.radices.product(run);
            }
        },
        set.node());
}

// B_{i1} = (A_{i1} intersect g*Z) / g for the set containing 1.
SetExpr residue_of_peeled_set(const SetExpr& set, const Int& g) {
    if (auto ds = set.as_digit_set()) {
        return SetExpr::explicit_set(ds->multiples_divided(g));
    }
    if (const auto* sub = std::get_if<SetExpr::BnsSubsum>(&set.node())) {
        int run = 1;
        while (sub->indices.contains(run + 1)) ++run;
        if (sub->radices.product(run) == g) {
            return SetExpr::bns_subsum(sub->radices.dropped_prefix(run), sub->indices.shifted_down(run));
        }
    }
    raise(errc::not_representable, "cannot peel a set of shape " + set.to_string());
}

std::vector<std::vector<std::uint64_t>> element_lists(
    const std::vector<std::pair<int, SetExpr>>& relevant, const Int& past_n) {
    std::vector<std::vector<std::uint64_t>> lists;
    lists.reserve(relevant.size());
    for (const auto& [index, set] : relevant) {
        (void)index;
        std::vector<std::uint64_t> elems;
        for (const Int& e : set.elements_below(past_n)) elems.push_back(to_u64(e, "set element"));
        lists.push_back(std::move(elems));
    }
    return lists;
}

}  // namespace

VerifyOutcome verify_additive(const AdditiveSystem& system, std::uint64_t bound, Exec exec) {
    kernel::CountPlan plan = kernel::make_plan(system, bound);
    std::vector<std::uint8_t> table = kernel::count_table(plan, exec);
    std::uint64_t n = kernel::first_non_unique(table);
    if (n == bound) {
        std::uint64_t claimed = std::max(system.claimed_bound(), bound);
        return VerifyOutcome{std::nullopt, system.with_claimed_bound(claimed)};
    }
    Int bad(static_cast<unsigned long>(n));
    CounterExample ce{bad, count_representations(system, bad), enumerate_representations(system, bad, 2)};
    return VerifyOutcome{std::move(ce), system};
}

Int count_representations(const AdditiveSystem& system, const Int& n) {
    assert(n >= 0);
    std::size_t size = to_index(n, "count target") + 1;
    Int past_n = n + 1;
    std::vector<Int> cur(size, Int(0)), next(size, Int(0));
    cur[0] = 1;
    for (const auto& [index, set] : system.relevant_sets(past_n)) {
        (void)index;
        if (auto modulus = set.as_ray_modulus()) {
            std::size_t m = to_index(*modulus, "ray modulus");
            for (std::size_t j = 0; j < size; ++j) {
                next[j] = cur[j];
                if (j >= m) next[j] += next[j - m];
            }
        } else {
            std::vector<std::uint64_t> elems;
            for (const Int& e : set.elements_below(past_n)) elems.push_back(to_u64(e, "set element"));
            for (std::size_t j = 0; j < size; ++j) {
                Int acc = 0;
                for (std::uint64_t a : elems) {
                    if (a > j) break;
                    acc += cur[j - a];
                }
                next[j] = acc;
            }
        }
        cur.swap(next);
    }
    return cur[size - 1];
}

std::vector<Assignment> enumerate_representations(const AdditiveSystem& system, const Int& n,
                                                  std::size_t limit) {
    if (limit == 0) return {};
    std::size_t size = to_index(n, "enumeration target") + 1;
    auto relevant = system.relevant_sets(n + 1);
    std::size_t k = relevant.size();
    if ((k + 1) * size > (std::size_t(1) << 31)) {
        raise(errc::set_too_large, "witness search would need too much memory");
    }
    auto lists = element_lists(relevant, n + 1);

    // suffix[j][v] = capped number of ways to write v from sets j..k-1.
    std::vector<std::vector<std::uint8_t>> suffix(k + 1, std::vector<std::uint8_t>(size, 0));
    suffix[k][0] = 1;
    for (std::size_t j = k; j-- > 0;) {
        for (std::size_t v = 0; v < size; ++v) {
            std::uint32_t acc = 0;
            for (std::uint64_t a : lists[j]) {
                if (a > v) break;
                acc += suffix[j + 1][v - a];
                if (acc >= 2) break;
            }
            suffix[j][v] = static_cast<std::uint8_t>(acc >= 2 ? 2 : acc);
        }
    }

    std::vector<Assignment> found;
    std::map<int, Int> partial;
    auto dfs = [&](auto&& self, std::size_t j, std::size_t remaining) -> void {
        if (found.size() >= limit) return;
        if (j == k) {
            if (remaining == 0) found.push_back(Assignment(partial));
            return;
        }
        for (std::uint64_t a : lists[j]) {
            if (a > remaining) break;
            if (suffix[j + 1][remaining - a] == 0) continue;
            if (a > 0) partial[relevant[j].first] = Int(static_cast<unsigned long>(a));
            self(self, j + 1, remaining - a);
            if (a > 0) partial.erase(relevant[j].first);
            if (found.size() >= limit) return;
        }
    };
    dfs(dfs, 0, size - 1);
    return found;
}

Assignment encode(const AdditiveSystem& system, const Int& n) {
    assert(n >= 0);
    if (Int(static_cast<unsigned long>(system.claimed_bound())) <= n) {
        raise(errc::not_verified,
              "encode needs the system verified past n = " + n.get_str() + " (claimed bound " +
                  std::to_string(system.claimed_bound()) + ")");
    }
    auto relevant = system.relevant_sets(n + 1);

    // Largest block first; exact for radix-built systems.
    std::vector<std::size_t> order(relevant.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *relevant[a].second.min_positive() > *relevant[b].second.min_positive();
    });
    Int remaining = n;
    std::map<int, Int> parts;
    for (std::size_t i : order) {
        if (remaining == 0) break;
        auto elems = relevant[i].second.elements_below(remaining + 1);
        if (!elems.empty() && elems.back() > 0) {
            parts[relevant[i].first] = elems.back();
            remaining -= elems.back();
        }
    }
    if (remaining == 0) return Assignment(std::move(parts));

    // Greedy missed; fall back to table backtracking.
    auto reps = enumerate_representations(system, n, 1);
    if (reps.empty()) {
        raise(errc::no_representation, "no representation of " + n.get_str());
    }
    return reps.front();
}

Int decode(const AdditiveSystem& system, const Assignment& assignment) {
    Int total = 0;
    for (const auto& [index, value] : assignment.parts()) {
        if (!system.has_set(index)) {
            raise(errc::index_out_of_range, "assignment uses set " + std::to_string(index));
        }
        if (!system.set_at(index).contains(value)) {
            raise(errc::element_not_in_set,
                  value.get_str() + " is not in set " + std::to_string(index));
        }
        total += value;
    }
    return total;
}

PeelResult peel(const AdditiveSystem& system, std::uint64_t bound) {
    if (bound < 2) raise(errc::structure_violation, "peeling needs a bound of at least 2");
    Int big_bound(static_cast<unsigned long>(bound));
    AdditiveSystem work = system.materialized_below(big_bound);
    if (!work.family_size_at_least(2)) {
        raise(errc::structure_violation, "peeling needs at least two sets");
    }
    if (work.claimed_bound() < bound) {
        VerifyOutcome outcome = verify_additive(work, bound);
        if (!outcome.ok()) {
            raise(errc::structure_violation,
                  "not an additive system: counterexample at n = " + outcome.counterexample->n.get_str());
        }
        work = outcome.system;
    }

    int k = work.explicit_count();
    int i1 = 0;
    for (int i = 1; i <= k; ++i) {
        if (work.set_at(i).contains(1)) {
            i1 = i;
            break;
        }
    }
    if (i1 == 0) raise(errc::structure_violation, "no set contains 1");

    auto g = least_absent_positive(work.set_at(i1));
    if (!g) raise(errc::structure_violation, "the set containing 1 is all of N0");
    assert(*g >= 2);

    std::vector<SetExpr> peeled;
    peeled.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        const SetExpr& set = work.set_at(i);
        if (i == i1) {
            peeled.push_back(residue_of_peeled_set(set, *g));
        } else {
            auto divided = set.divided_exact(*g);
            if (!divided) {
                raise(errc::structure_violation, "set " + std::to_string(i) +
                                                     " has an element not divisible by g = " + g->get_str());
            }
            peeled.push_back(std::move(*divided));
        }
    }

    // Re-derive the originals below the bound; a mismatch means the input
    // was not an additive system (the extraction rule is checked, not
    // assumed).
    for (int i = 1; i <= k; ++i) {
        const SetExpr& original = work.set_at(i);
        std::vector<Int> expect = original.elements_below(big_bound);
        std::vector<Int> got =
            i == i1 ? sumset(SetExpr::interval(*g), peeled[static_cast<std::size_t>(i - 1)].dilate(*g),
                             big_bound)
                    : peeled[static_cast<std::size_t>(i - 1)].dilate(*g).elements_below(big_bound);
        if (expect != got) {
            raise(errc::structure_violation,
                  "peel reconstruction failed for set " + std::to_string(i));
        }
    }

    PeelResult result;
    result.i1 = i1;
    result.g = *g;
    result.dilation_case = peeled[static_cast<std::size_t>(i1 - 1)].denotes_zero_only();
    result.peeled = std::move(peeled);
    return result;
}

}  // namespace addsys
