#include "addsys/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "addsys/verify.hpp"

namespace addsys {

namespace {

constexpr std::size_t kPolyDegreeCap = std::size_t(1) << 24;

// Exact check of a = b (+) c through the sum multiset, for scales where
// the dense polynomial route is off the table.
bool direct_sum_equals(const DigitSet& a, const DigitSet& b, const DigitSet& c) {
    return is_direct_sum(b, c) && b.sumset_with(c) == a;
}

bool validate_pair(const DigitSet& a, const DigitSet& b, const DigitSet& c) {
    if (b.max() + c.max() < Int(static_cast<unsigned long>(kPolyDegreeCap))) {
        return poly_identity_check(a, b, c);
    }
    return direct_sum_equals(a, b, c);
}

// Branch-and-prune split search.  The smallest element of `a` not yet
// expressible as b + c can only enter as itself (anything added later
// produces sums at least that large), so it joins one side or the other;
// every new cross sum must be a fresh member of `a`.
class SplitSearch {
  public:
    SplitSearch(const DigitSet& a, std::vector<Decomposition>& out)
        : a_(a), elems_(a.elements()), max_factor_(elems_.size() / 2), out_(out) {}

    void run() {
        if (elems_.size() < 4 || is_prime(Int(static_cast<unsigned long>(elems_.size())))) return;
        sums_.insert(0);
        add(b_, c_, elems_[1]);  // canonical orientation: min positive in the left factor
        search(2);
    }

  private:
    void search(std::size_t pos) {
        while (pos < elems_.size() && sums_.count(elems_[pos])) ++pos;
        if (pos == elems_.size()) {
            if (b_.size() >= 2 && c_.size() >= 2) {
                DigitSet left = DigitSet::from_sorted(b_);
                DigitSet right = DigitSet::from_sorted(c_);
                if (validate_pair(a_, left, right)) {
                    out_.push_back(Decomposition{std::move(left), std::move(right)});
                }
            }
            return;
        }
        const Int& x = elems_[pos];
        if (b_.size() < max_factor_ && add(b_, c_, x)) {
            search(pos);
            remove(b_, c_, x);
        }
        if (c_.size() < max_factor_ && add(c_, b_, x)) {
            search(pos);
            remove(c_, b_, x);
        }
    }

    bool add(std::vector<Int>& side, const std::vector<Int>& other, const Int& x) {
        for (const Int& o : other) {
            Int s = x + o;
            if (!a_.contains(s) || sums_.count(s)) return false;
        }
        for (const Int& o : other) sums_.insert(x + o);
        side.push_back(x);
        return true;
    }

    void remove(std::vector<Int>& side, const std::vector<Int>& other, const Int& x) {
        for (const Int& o : other) sums_.erase(x + o);
        side.pop_back();
    }

    const DigitSet& a_;
    const std::vector<Int>& elems_;
    std::size_t max_factor_;
    std::vector<Int> b_{Int(0)};
    std::vector<Int> c_{Int(0)};
    std::set<Int> sums_;
    std::vector<Decomposition>& out_;
};

std::vector<Int> factor_nondecreasing(Int n) {
    assert(n >= 2);
    std::vector<Int> factors;
    Int d = 2;
    while (n > 1) {
        if (is_prime(n)) {
            factors.push_back(n);
            break;
        }
        while (n % d != 0) ++d;
        factors.push_back(d);
        n /= d;
    }
    return factors;
}

}  // namespace

DigitSet solve_ax_interval(const Int& a, const Int& b) {
    assert(a >= 1 && b >= 1);
    return DigitSet::interval(b).dilated(a);
}

bool poly_identity_check(const DigitSet& a, const DigitSet& b, const DigitSet& c) {
    Int degree = b.max() + c.max();
    std::size_t size = to_index(degree, "polynomial degree") + 1;
    if (size > kPolyDegreeCap) {
        raise(errc::set_too_large, "polynomial degree " + degree.get_str() + " exceeds the dense cap");
    }
    std::vector<std::uint32_t> product(size, 0);
    for (const Int& x : b.elements()) {
        std::size_t xi = to_index(x, "factor element");
        for (const Int& y : c.elements()) {
            product[xi + to_index(y, "factor element")] += 1;
        }
    }
    std::vector<std::uint32_t> target(size, 0);
    for (const Int& e : a.elements()) {
        if (e > degree) return false;
        target[to_index(e, "sum element")] = 1;
    }
    return product == target;
}

std::vector<Decomposition> decompose_set(const DigitSet& a) {
    // d*A splits exactly as d times a split of A, so search at unit scale.
    Int g = a.element_gcd();
    DigitSet base = g > 1 ? *a.divided_exact(g) : a;

    std::vector<Decomposition> out;
    SplitSearch(base, out).run();
    if (g > 1) {
        for (Decomposition& d : out) {
            d.left = d.left.dilated(g);
            d.right = d.right.dilated(g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Decomposition> decompose_set_bruteforce(const DigitSet& a, std::size_t cap) {
    if (a.size() > cap) {
        raise(errc::set_too_large, "brute-force split of a " + std::to_string(a.size()) +
                                       "-element set exceeds the cap of " + std::to_string(cap));
    }
    std::vector<Decomposition> out;
    if (a.size() < 4) return out;
    const std::vector<Int>& elems = a.elements();
    std::size_t free_count = elems.size() - 2;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free_count); ++mask) {
        std::vector<Int> b = {elems[0], elems[1]};
        for (std::size_t i = 0; i < free_count; ++i) {
            if (mask & (std::uint64_t(1) << i)) b.push_back(elems[i + 2]);
        }

        // Grow the cofactor greedily: the smallest uncovered element of a
        // must join it; reject as soon as a cross sum escapes `a` or
        // collides.
        std::vector<Int> c = {Int(0)};
        std::set<Int> sums(b.begin(), b.end());
        bool ok = true;
        while (ok) {
            const Int* next = nullptr;
            for (const Int& e : elems) {
                if (!sums.count(e)) {
                    next = &e;
                    break;
                }
            }
            if (!next) break;
            for (const Int& x : b) {
                Int s = x + *next;
                if (!a.contains(s) || !sums.insert(s).second) {
                    ok = false;
                    break;
                }
            }
            if (ok) c.push_back(*next);
        }
        if (ok && b.size() >= 2 && c.size() >= 2 && b.size() * c.size() == elems.size()) {
            out.push_back(Decomposition{DigitSet::from_sorted(b), DigitSet::from_sorted(c)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_indecomposable_set(const DigitSet& a) {
    if (is_prime(Int(static_cast<unsigned long>(a.size())))) return true;
    return decompose_set(a).empty();
}

std::vector<Decomposition> interval_decompositions(const Int& n) {
    assert(n >= 2);
    return decompose_set(DigitSet::interval(n));
}

std::optional<Classification> classify_system(const AdditiveSystem& system, int depth) {
    assert(depth >= 1);
    for (int i = 1; i <= depth; ++i) {
        if (!system.has_set(i)) {
            raise(errc::index_out_of_range, "system has no set " + std::to_string(i));
        }
        auto ds = system.set_at(i).as_digit_set();
        if (!ds) {
            raise(errc::infinite_set_in_prefix,
                  "set " + std::to_string(i) + " is infinite; classification inspects finite sets");
        }
        if (is_prime(Int(static_cast<unsigned long>(ds->size())))) continue;
        std::vector<Decomposition> decs = decompose_set(*ds);
        if (!decs.empty()) return Classification{i, decs.front()};
    }
    return std::nullopt;
}

AdditiveSystem decompose_system(const AdditiveSystem& system, int index, const Decomposition& d,
                                std::uint64_t bound) {
    AdditiveSystem work = system.materialized_below(Int(static_cast<unsigned long>(bound)));
    if (index < 1 || index > work.explicit_count()) {
        raise(errc::index_out_of_range, "no set at index " + std::to_string(index));
    }
    auto target = work.set_at(index).as_digit_set();
    if (!target) {
        raise(errc::not_a_valid_decomposition, "set " + std::to_string(index) + " is infinite");
    }
    if (d.left.size() < 2 || d.right.size() < 2 || !is_direct_sum(d.left, d.right) ||
        d.left.sumset_with(d.right) != *target) {
        raise(errc::not_a_valid_decomposition,
              "the factors do not recompose set " + std::to_string(index));
    }

    std::vector<SetExpr> sets;
    for (int i = 1; i <= work.explicit_count(); ++i) {
        if (i == index) {
            sets.push_back(SetExpr::explicit_set(d.left));
            sets.push_back(SetExpr::explicit_set(d.right));
        } else {
            sets.push_back(work.set_at(i));
        }
    }
    std::sort(sets.begin(), sets.end(), [](const SetExpr& a, const SetExpr& b) {
        return *a.min_positive() < *b.min_positive();
    });
    AdditiveSystem result(std::move(sets));
    VerifyOutcome outcome = verify_additive(result, bound);
    if (!outcome.ok()) {
        raise(errc::structure_violation,
              "decomposition broke uniqueness at n = " + outcome.counterexample->n.get_str());
    }
    return outcome.system;
}

PrimeRefinement refine_to_prime_radices(const RadixSeq& radices) {
    std::vector<Int> refined;
    std::vector<std::vector<int>> groups;
    for (const Int& g : radices.prefix()) {
        std::vector<Int> factors = factor_nondecreasing(g);
        std::vector<int> group;
        for (Int& f : factors) {
            refined.push_back(std::move(f));
            group.push_back(static_cast<int>(refined.size()));
        }
        groups.push_back(std::move(group));
    }
    RadixSeq::Tail tail = radices.tail();
    if (radices.repeats()) {
        // The repeating entry refines to a repeating run only when it is a
        // prime power.
        std::vector<Int> last = factor_nondecreasing(radices.prefix().back());
        for (const Int& f : last) {
            if (f != last.front()) {
                raise(errc::not_representable,
                      "a repeating composite radix with distinct prime factors has no "
                      "radix-sequence refinement");
            }
        }
    }
    return PrimeRefinement{RadixSeq(std::move(refined), tail), Partition(std::move(groups))};
}

}  // namespace addsys
