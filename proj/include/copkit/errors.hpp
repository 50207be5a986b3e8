#pragma once

#include <stdexcept>
#include <string>

namespace copkit {

// Base of every exception this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller-side problems: bad spec strings, out-of-window queries, invalid
// arguments. The CLI maps these to exit code 1.
class input_error : public error {
public:
    using error::error;
};

// Set-spec grammar violations and file parse failures.
class spec_error : public input_error {
public:
    using input_error::input_error;
};

// A query reached beyond the materialized window. The message names the
// bound that would have been required; nothing is ever silently truncated.
class window_error : public input_error {
public:
    window_error(const std::string& what, std::uint64_t required_bound)
        : input_error(what + " (required bound: " + std::to_string(required_bound) + ")"),
          required_bound_(required_bound) {}

    std::uint64_t required_bound() const { return required_bound_; }

private:
    std::uint64_t required_bound_;
};

// Argument outside an operation's domain (not a point, n >= m, ...).
class value_error : public input_error {
public:
    using input_error::input_error;
};

// Asking for the axis partner of the center. Kept distinct from
// value_error because the center is a point, just not an axis point.
class center_error : public input_error {
public:
    using input_error::input_error;
};

// An exact internal identity failed. This is a bug, never user input;
// the CLI maps it to exit code 2.
class invariant_error : public error {
public:
    using error::error;
};

} // namespace copkit
