#include "addsys/errors.hpp"

namespace addsys {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::negative_element: return "NegativeElement";
        case errc::missing_zero: return "MissingZero";
        case errc::not_verified: return "NotVerified";
        case errc::no_representation: return "NoRepresentation";
        case errc::element_not_in_set: return "ElementNotInSet";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::overlapping_parts: return "OverlappingParts";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::structure_violation: return "StructureViolation";
        case errc::depth_exceeds_finite_radices: return "DepthExceedsFiniteRadices";
        case errc::not_interval_partition: return "NotIntervalPartition";
        case errc::set_too_large: return "SetTooLarge";
        case errc::infinite_set_in_prefix: return "InfiniteSetInPrefix";
        case errc::not_a_valid_decomposition: return "NotAValidDecomposition";
        case errc::not_representable: return "NotRepresentable";
        case errc::bad_document: return "BadDocument";
    }
    return "UnknownError";
}

}  // namespace addsys
