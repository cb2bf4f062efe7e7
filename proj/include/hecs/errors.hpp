#pragma once

#include <stdexcept>
#include <string>

namespace hecs {

// Failure kinds surfaced by the library. Tests match on the code rather
// than on message text.
enum class errc {
    missing_face,
    non_positive_weight,
    index_out_of_range,
    duplicate_simplex,
    degenerate_simplex,
    not_free,
    unknown_edge,
    dimension_mismatch,
    dense_cap_exceeded,
    zero_pivot,
    no_incident_triangle,
    kernel_clash,
    nontrivial_homology,
    factorization_breakdown,
    non_finite,
    target_unreachable,
    degenerate_input,
    invalid_argument,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hecs
