#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meropole {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad expression, unknown variable,
/// mismatched variable lists, zero denominator).
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The mathematics refuses: the input violates a precondition of the theory
/// (non-isolated singularity, non-reduced fiber, incomplete enumeration).
class Refusal : public Error {
public:
    using Error::Error;
};

class NonIsolated : public Refusal {
public:
    using Refusal::Refusal;
};

class NotVanishing : public Refusal {
public:
    using Refusal::Refusal;
};

class NonzeroLinearPart : public Refusal {
public:
    using Refusal::Refusal;
};

class GenericityFailure : public Refusal {
public:
    using Refusal::Refusal;
};

class DegeneratePair : public Refusal {
public:
    using Refusal::Refusal;
};

class Incomplete : public Refusal {
public:
    using Refusal::Refusal;
};

}  // namespace meropole
