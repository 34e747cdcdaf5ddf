#pragma once

#include <stdexcept>

namespace onepass {

// Invalid or inconsistent caller-supplied data (bad file, bad parameter).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds a hard enumeration limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace onepass
