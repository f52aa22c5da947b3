#ifndef VCSP_ERROR_HPP
#define VCSP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vcsp {

/// Malformed input: dimension mismatches, bad indices, inconsistent domain sizes.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request is well-formed but exceeds a size cap or a strategy's reach.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact arithmetic result does not fit the fixed-width rational representation.
class OverflowError : public CapabilityError {
public:
    using CapabilityError::CapabilityError;
};

/// A file could not be parsed; `where()` is a byte offset or a JSON pointer.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}

    const std::string& where() const noexcept { return where_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string where_;
    std::string message_;
};

} // namespace vcsp

#endif // VCSP_ERROR_HPP
