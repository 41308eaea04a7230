#pragma once

#include <stdexcept>
#include <string>

namespace subpath {

// Bad user input: malformed files, precondition violations on parameters.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration exceeded the caller-supplied node budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace subpath

// Internal consistency check. Failure means a bug, not bad input.
#define SUBPATH_CHECK(cond, msg)                                              \
    do {                                                                      \
        if (!(cond))                                                          \
            throw std::logic_error(std::string("internal check failed: ") +  \
                                   (msg));                                    \
    } while (0)
