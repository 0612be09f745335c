#ifndef LIND_ERRORS_HPP
#define LIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lind {

// Exit-code taxonomy: input errors -> 1, numerical failures -> 2,
// internal-consistency failures -> 3 (see tools/lind.cpp).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear solve hit a pivot below the breakdown threshold.
class SingularSystemError : public NumericalError {
public:
    SingularSystemError(const std::string& msg, int column)
        : NumericalError(msg), column(column) {}
    int column;
};

// Cohomology equation with a right-hand side whose average is not small.
class SolvabilityError : public NumericalError {
public:
    SolvabilityError(const std::string& msg) : NumericalError(msg) {}
};

} // namespace lind

#endif
