#ifndef WALLKIT_ERRORS_HPP
#define WALLKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wallkit {

enum class errc {
    cycle_detected,
    index_out_of_range,
    not_successor_pair,
    empty_brick,
    coverage_failure,
    ground_mismatch,
    empty_overlap,
    not_a_permutation,
    negative_dimension,
    size_mismatch,
    freeness_not_asserted,
    budget_exceeded,
    invalid_merge,
    sign_convention_broken,
    dimension_mismatch,
    schema_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(errc code);

} // namespace wallkit

#endif
