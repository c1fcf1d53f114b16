// errors.hpp — error categories shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace sfflab {

// Validation failures (bad arguments, broken invariants at construction)
// are reported as std::invalid_argument. NumericalError marks failures of
// the numerics themselves: eigensolver non-convergence, partition-function
// underflow, a filter hitting zero at an occurring frequency.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sfflab
