#pragma once

#include <stdexcept>
#include <string>

namespace addsys {

/// Error categories surfaced by the library.  The CLI maps each category to
/// an exit-code class: `usage` errors exit 2, `negative` results exit 1.
enum class errc {
    negative_element,
    missing_zero,
    not_verified,
    no_representation,
    element_not_in_set,
    index_out_of_range,
    overlapping_parts,
    invalid_partition,
    structure_violation,
    depth_exceeds_finite_radices,
    not_interval_partition,
    set_too_large,
    infinite_set_in_prefix,
    not_a_valid_decomposition,
    not_representable,
    bad_document,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace addsys
