#include "wallkit/errors.hpp"

namespace wallkit {

const char* errc_name(errc code) {
    switch (code) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_successor_pair: return "NotSuccessorPair";
        case errc::empty_brick: return "EmptyBrick";
        case errc::coverage_failure: return "CoverageFailure";
        case errc::ground_mismatch: return "GroundMismatch";
        case errc::empty_overlap: return "EmptyOverlap";
        case errc::not_a_permutation: return "NotAPermutation";
        case errc::negative_dimension: return "NegativeDimension";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::freeness_not_asserted: return "FreenessNotAsserted";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::invalid_merge: return "InvalidMerge";
        case errc::sign_convention_broken: return "SignConventionBroken";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::schema_error: return "SchemaError";
    }
    return "UnknownError";
}

} // namespace wallkit
