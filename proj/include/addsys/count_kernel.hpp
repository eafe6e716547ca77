#pragma once

#include <cstdint>
#include <vector>

#include "addsys/system.hpp"

namespace addsys::kernel {

/// Kernel selection.  Serial is the reference implementation; Parallel is
/// the OpenMP version.  Auto picks Parallel for large scans when OpenMP
/// is compiled in.
enum class Exec { Serial, Parallel, Auto };

/// A system flattened for table scans below a fixed bound: every family
/// member that can contribute is either a finite element list or a full
/// multiple set (ray), which gets a cheaper recurrence pass.
struct CountPlan {
    std::uint64_t bound = 0;
    std::vector<std::vector<std::uint64_t>> element_sets;  // sorted, start with 0
    std::vector<std::uint64_t> ray_moduli;
};

CountPlan make_plan(const AdditiveSystem& system, std::uint64_t bound);

/// Representation counts for every n < bound, saturated at 2.  The table
/// distinguishes exactly what uniqueness needs: 0, 1, or "2 or more".
std::vector<std::uint8_t> count_table_serial(const CountPlan& plan);
std::vector<std::uint8_t> count_table_parallel(const CountPlan& plan);
std::vector<std::uint8_t> count_table(const CountPlan& plan, Exec exec);

/// Index of the first entry differing from 1, or bound if none.
std::uint64_t first_non_unique(const std::vector<std::uint8_t>& table);

}  // namespace addsys::kernel
