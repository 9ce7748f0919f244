#pragma once

#include <stdexcept>

namespace moduli {

// Thrown when an input exceeds a hard size guard (canonicalization vertex
// limit, enumeration genus range). Distinct from std::domain_error, which
// this library throws for violated mathematical preconditions.
struct capacity_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace moduli
