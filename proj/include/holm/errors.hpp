#pragma once

#include <stdexcept>
#include <string>

namespace holm {

// Bad caller input: invalid parameters, off-curve points, out-of-range indices.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation landed somewhere the theory says it cannot (for example a
// rational point with y = 0 on a Holm-derived curve).
class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact division or closed form disagreed with itself. Indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Trial-division ceiling exceeded. Never silently truncated.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// psi_n vanishes at the point, so n*P is the point at infinity and the
// division-polynomial quotient cannot be formed.
class TorsionDenominatorError : public ContradictionError {
public:
    using ContradictionError::ContradictionError;
};

}  // namespace holm
