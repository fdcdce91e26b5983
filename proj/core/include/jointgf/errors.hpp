#pragma once

#include <stdexcept>
#include <string>

namespace jointgf {

// A mathematical precondition of an operation does not hold (mismatched
// truncation orders, invalid structure parameters, an inapplicable
// composition). The message names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A real-valued evaluation left the analyticity domain of the function.
class EvaluationDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An exhaustive enumeration would exceed its configured size cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace jointgf
