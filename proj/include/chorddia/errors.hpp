#pragma once

#include <stdexcept>

namespace chorddia {

// Argument outside the domain of an operation (n = 0, odd point count, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded (oracle order, group closure).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that must hold exactly did not (inexact division, nonzero
// remainder). Always an implementation bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace chorddia
