#pragma once

#include <stdexcept>
#include <string>

namespace symdepth {

// Malformed or out-of-contract input (bad file, wrong ring size, violated
// precondition such as a unit ideal where a proper ideal is required).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two independent computations disagreed. Always an implementation bug.
class CrossCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured search or size limit was hit. The computation is abandoned,
// never approximated.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace symdepth
