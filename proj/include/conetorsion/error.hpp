#pragma once

#include <stdexcept>
#include <string>

namespace conetorsion {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation at a pole of a meromorphic function.
class pole_error : public error {
public:
    using error::error;
};

// Argument outside the documented domain.
class domain_error : public error {
public:
    using error::error;
};

// Iteration cap or tail bound not met.
class convergence_error : public error {
public:
    using error::error;
};

// Order, kind or dimension the library does not cover.
class unsupported_error : public error {
public:
    using error::error;
};

// Arithmetic left the representable range (rational overflow, exp overflow).
class overflow_error : public error {
public:
    using error::error;
};

}  // namespace conetorsion
