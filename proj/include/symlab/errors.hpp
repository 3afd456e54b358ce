// errors.hpp -- exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace symlab {

/// Base class for all symlab errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A word, dataset or symmetry was used outside its (alphabet, length) domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested word universe does not fit the desk-scale enumeration cap.
class EnumerationTooLargeError : public Error {
public:
    using Error::Error;
};

/// A letter had no code in the encoder's codebook.
class EncodingError : public Error {
public:
    using Error::Error;
};

/// No distinct non-zero codebook exists for the requested (alphabet, k).
class InfeasibleCodebookError : public Error {
public:
    using Error::Error;
};

/// A non-finite value surfaced in numeric code (objective, gradient, ...).
class NumericError : public Error {
public:
    using Error::Error;
};

/// A theorem-check hypothesis failed. `hypothesis()` names which one; this is
/// the diagnostic callers want, since the theorems only apply when every
/// hypothesis holds.
class PreconditionError : public Error {
public:
    PreconditionError(std::string hypothesis, const std::string& detail)
        : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

} // namespace symlab
