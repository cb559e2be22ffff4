#pragma once

#include <stdexcept>

namespace palinstar {

// Argument outside the domain of a bound or construction (k < 3, n < 1, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Letter index not in [0, sigma) or symbol missing from the alphabet.
struct InvalidLetter : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Structurally invalid input tree (fewer than 3 branches, empty branch, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation called on a tree outside its precondition.
struct Inapplicable : std::logic_error {
    using std::logic_error::logic_error;
};

// Exhaustive search refused because the labeling count exceeds the cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace palinstar
