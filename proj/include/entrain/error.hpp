#pragma once

#include <stdexcept>
#include <string>

namespace entrain {

// Bad input data, schema violations, bad configuration. Maps to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undefined numerical results (log of zero, failed gradient check). Maps to exit code 2.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace entrain
