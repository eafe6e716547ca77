#include "addsys/count_kernel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addsys::kernel {

namespace {

constexpr std::uint64_t kMaxTableBound = std::uint64_t(1) << 28;
constexpr std::uint8_t kCap = 2;

inline std::uint8_t capped(std::uint64_t v) { return v >= kCap ? kCap : static_cast<std::uint8_t>(v); }

// out[n] = sum over set elements a <= n of in[n - a], saturated.
// Reads only `in`, so rows are independent.
void element_pass_row(const std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out,
                      const std::vector<std::uint64_t>& elems, std::uint64_t n) {
    std::uint64_t acc = 0;
    for (std::uint64_t a : elems) {
        if (a > n) break;
        acc += in[n - a];
        if (acc >= kCap) break;
    }
    out[n] = capped(acc);
}

// A ray contributes every multiple of m, so the convolution telescopes:
// out[n] = in[n] + out[n - m].  Sequential along each residue class.
void ray_pass_class(const std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out,
                    std::uint64_t modulus, std::uint64_t residue) {
    std::uint64_t bound = in.size();
    std::uint64_t prev = 0;
    for (std::uint64_t n = residue; n < bound; n += modulus) {
        std::uint64_t acc = prev + in[n];
        out[n] = capped(acc);
        prev = out[n];
    }
}

}  // namespace

CountPlan make_plan(const AdditiveSystem& system, std::uint64_t bound) {
    if (bound > kMaxTableBound) {
        raise(errc::set_too_large, "scan bound " + std::to_string(bound) + " exceeds the table limit");
    }
    CountPlan plan;
    plan.bound = bound;
    Int big_bound(static_cast<unsigned long>(bound));
    for (const auto& [index, set] : system.relevant_sets(big_bound)) {
        (void)index;
        if (auto modulus = set.as_ray_modulus()) {
            plan.ray_moduli.push_back(to_u64(*modulus, "ray modulus"));
            continue;
        }
        std::vector<std::uint64_t> elems;
        for (const Int& e : set.elements_below(big_bound)) {
            elems.push_back(to_u64(e, "set element"));
        }
        plan.element_sets.push_back(std::move(elems));
    }
    return plan;
}

std::vector<std::uint8_t> count_table_serial(const CountPlan& plan) {
    std::uint64_t bound = plan.bound;
    std::vector<std::uint8_t> cur(bound, 0), next(bound, 0);
    if (bound == 0) return cur;
    cur[0] = 1;
    for (const auto& elems : plan.element_sets) {
        for (std::uint64_t n = 0; n < bound; ++n) element_pass_row(cur, next, elems, n);
        cur.swap(next);
    }
    for (std::uint64_t m : plan.ray_moduli) {
        for (std::uint64_t r = 0; r < m && r < bound; ++r) ray_pass_class(cur, next, m, r);
        cur.swap(next);
    }
    return cur;
}

std::vector<std::uint8_t> count_table_parallel(const CountPlan& plan) {
    std::uint64_t bound = plan.bound;
    std::vector<std::uint8_t> cur(bound, 0), next(bound, 0);
    if (bound == 0) return cur;
    cur[0] = 1;
    for (const auto& elems : plan.element_sets) {
        const std::vector<std::uint8_t>& in = cur;
        std::vector<std::uint8_t>& out = next;
#pragma omp parallel for schedule(static)
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(bound); ++n) {
            element_pass_row(in, out, elems, static_cast<std::uint64_t>(n));
        }
        cur.swap(next);
    }
    for (std::uint64_t m : plan.ray_moduli) {
        const std::vector<std::uint8_t>& in = cur;
        std::vector<std::uint8_t>& out = next;
        std::int64_t classes = static_cast<std::int64_t>(m < bound ? m : bound);
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < classes; ++r) {
            ray_pass_class(in, out, m, static_cast<std::uint64_t>(r));
        }
        cur.swap(next);
    }
    return cur;
}

std::vector<std::uint8_t> count_table(const CountPlan& plan, Exec exec) {
    bool parallel = false;
    switch (exec) {
        case Exec::Serial: parallel = false; break;
        case Exec::Parallel: parallel = true; break;
        case Exec::Auto:
#ifdef _OPENMP
            parallel = plan.bound >= 1u << 14;
#else
            parallel = false;
#endif
            break;
    }
    return parallel ? count_table_parallel(plan) : count_table_serial(plan);
}

std::uint64_t first_non_unique(const std::vector<std::uint8_t>& table) {
    for (std::uint64_t n = 0; n < table.size(); ++n) {
        if (table[n] != 1) return n;
    }
    return table.size();
}

}  // namespace addsys::kernel
