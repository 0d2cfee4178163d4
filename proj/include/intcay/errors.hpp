#pragma once

#include <stdexcept>
#include <string>

namespace intcay {

/// Bad user input or violated precondition: malformed spec, invalid element,
/// non-inverse-closed multiset. The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent decision routes disagreed. This is an implementation bug,
/// never a property of the input. The CLI maps this to exit code 2.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace intcay
