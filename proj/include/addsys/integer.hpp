#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "addsys/errors.hpp"

namespace addsys {

/// Exact unbounded integer.  Block bases G_i grow geometrically, so every
/// element value in the library is arbitrary precision.
using Int = mpz_class;

inline bool fits_u64(const Int& value) {
    return value >= 0 && value.fits_ulong_p();
}

/// Narrow to a machine word for table indexing.  Scan bounds must be
/// memory-feasible anyway, so the cast failing means the request was
/// out of desk scale.
inline std::uint64_t to_u64(const Int& value, const char* what) {
    if (value < 0 || !value.fits_ulong_p()) {
        raise(errc::set_too_large, std::string(what) + " does not fit a machine word: " + value.get_str());
    }
    return value.get_ui();
}

inline std::size_t to_index(const Int& value, const char* what) {
    return static_cast<std::size_t>(to_u64(value, what));
}

inline Int parse_int(const std::string& text) {
    Int v;
    if (v.set_str(text, 10) != 0) {
        raise(errc::bad_document, "not a decimal integer: '" + text + "'");
    }
    return v;
}

/// Ceiling division for nonnegative operands.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_prime(const Int& n);

}  // namespace addsys
