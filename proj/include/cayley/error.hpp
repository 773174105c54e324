#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Failure categories surfaced by the library. Every throwing operation
/// documents which of these it can raise.
enum class errc {
    parse,               // malformed rational / vector / parameter text
    invalid_object,      // zero homogeneous vector, singular matrix, ...
    degenerate_span,     // plane_through on collinear or coincident points
    invalid_group_element,  // c = 0
    invalid_parameter,   // beta in {0, 3} or other excluded value
    projection_center,   // projecting the center U itself
    insufficient_data,   // identification system underdetermined
    not_in_family,       // fitted beta in {0, 3}
    inconsistent_input,  // sample points not on one common cylinder
    incomparable_jets,   // jets with different chart or basepoint
    truncation,          // jet order too small for the requested cap
    invalid_basepoint,   // point not on (or singular on) a conic
    identical_curve,     // conics equal or sharing a component
    internal,            // broken invariant; indicates a library bug
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

namespace detail {

inline void require(bool condition, errc kind, const std::string& message) {
    if (!condition) throw error(kind, message);
}

}  // namespace detail

}  // namespace cayley
