#pragma once

#include <stdexcept>
#include <string>

namespace ratmed {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (bad triangle, zero coordinate, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A division by an exactly-zero term. `index()` names the offending term
/// (sequence index or orbit step, depending on the caller).
class ZeroDivisionError : public DomainError {
public:
    ZeroDivisionError(const std::string& what, long index)
        : DomainError(what + " (index " + std::to_string(index) + ")"), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

/// An identity that must hold exactly did not. Either the input broke a
/// documented precondition or the implementation is wrong.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A search checkpoint could not be trusted for resumption.
class ResumeError : public Error {
public:
    using Error::Error;
};

}  // namespace ratmed
