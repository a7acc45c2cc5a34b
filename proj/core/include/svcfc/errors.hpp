#pragma once

#include <stdexcept>
#include <string>

namespace svcfc {

// Malformed arguments or files: out-of-range vertices, bad headers, partial
// colorings, zero caps.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally unusable instances: disconnected graphs, annotation sets that
// are not twin covers, unsatisfiable generator specs.
class validity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive search ran out of its node budget or a path enumeration hit
// its cap where an exact answer was required.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace svcfc
