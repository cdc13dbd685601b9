#pragma once

#include <stdexcept>
#include <string>

namespace chowforms {

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ProportionalPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ProportionalFactors : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GenericityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotZeroDimensional : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace chowforms
