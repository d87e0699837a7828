#pragma once

#include <stdexcept>
#include <string>

namespace orbitlift {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands built over different algebra specs.
struct spec_mismatch_error : error {
    explicit spec_mismatch_error(const std::string& what) : error(what) {}
};

/// Division by the zero element.
struct division_by_zero_error : error {
    explicit division_by_zero_error(const std::string& what) : error(what) {}
};

/// Nonzero element of zero norm in a split quaternion spec.
struct non_invertible_error : error {
    explicit non_invertible_error(const std::string& what) : error(what) {}
};

/// Matrix dimensions incompatible with the requested operation.
struct shape_error : error {
    explicit shape_error(const std::string& what) : error(what) {}
};

/// Input required to be nilpotent (or unipotent) is not.
struct nilpotency_error : error {
    explicit nilpotency_error(const std::string& what) : error(what) {}
};

/// Degenerate Gram matrix, or a restriction that should be invertible is not.
struct singular_error : error {
    explicit singular_error(const std::string& what) : error(what) {}
};

/// Tableau not admissible for the requested sign.
struct admissibility_error : error {
    explicit admissibility_error(const std::string& what) : error(what) {}
};

/// {X,H,Y} does not satisfy the sl2 relations / H has a bad spectrum.
struct invalid_triple_error : error {
    explicit invalid_triple_error(const std::string& what) : error(what) {}
};

/// Argument lies outside the subgroup/subspace the operation is defined on.
struct membership_error : error {
    explicit membership_error(const std::string& what) : error(what) {}
};

/// Dual pair is not in the stable range / no isotropic split found.
struct stable_range_error : error {
    explicit stable_range_error(const std::string& what) : error(what) {}
};

/// Malformed value for a constructor (bad spec parameters, bad sizes).
struct value_error : error {
    explicit value_error(const std::string& what) : error(what) {}
};

} // namespace orbitlift
