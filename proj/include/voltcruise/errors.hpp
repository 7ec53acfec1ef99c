#pragma once

#include <stdexcept>
#include <string>

namespace voltcruise {

/// Input outside the documented domain of an operation or parameter record.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The battery model was driven outside its valid region (non-positive voltage).
class ModelViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No admissible positive charge exists: the battery empties before the requested time.
class DepletionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace voltcruise
