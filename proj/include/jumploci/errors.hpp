#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

// Exit codes used by the CLI; library code throws, the CLI maps.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_budget = 3,
    exit_validation = 4,
    exit_internal = 5,
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured computation budget (support cap, point cap, minor size) was exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data violates a declared invariant (e.g. non-symmetric Alexander polynomial
// on a closed-manifold datum, non-skew matrix passed to a Pfaffian).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jumploci
