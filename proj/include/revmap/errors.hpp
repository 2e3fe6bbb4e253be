#pragma once

#include <stdexcept>
#include <string>

namespace revmap {

// Operand shapes do not fit together (row/column counts, ambient dimensions).
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inverting or applying a matrix that has no inverse.
class singular_matrix_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two scalars from different quadratic fields Q(sqrt d) met in one operation.
class context_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an analysis routine does not hold for the input.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (scalar strings, pair documents).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace revmap
