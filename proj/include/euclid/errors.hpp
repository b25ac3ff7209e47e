#pragma once

#include <stdexcept>

namespace euclid {

// Input violates a documented precondition (degenerate segment, zero angle,
// division by an interval containing zero, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A certified result could not be produced within the configured refinement
// budget. Retrying with a larger cap may succeed.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant broke: two enclosures of the same real turned out
// disjoint, or similar. Always a bug, never bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace euclid
