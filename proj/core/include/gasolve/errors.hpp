#pragma once

#include <stdexcept>
#include <string>

namespace gasolve {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Base for errors raised while consuming a draw script.
class ScriptError : public Error {
public:
    using Error::Error;
};

/// A draw was requested past the end of the script.
class ScriptExhausted : public ScriptError {
public:
    using ScriptError::ScriptError;
};

/// The next script entry is of the wrong kind for the request.
class ScriptTypeMismatch : public ScriptError {
public:
    using ScriptError::ScriptError;
};

/// An integer script entry does not fit the [lo,hi] of the request consuming it.
class ScriptOutOfRange : public ScriptError {
public:
    using ScriptError::ScriptError;
};

/// An integer draw was requested with lo > hi.
class InvalidRange : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Invalid run configuration (bad parameter values or combinations).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Vector lengths do not agree (chromosome vs. coefficients, costs vs. population).
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// A crossover cut point lies outside [1, L-1].
class InvalidCutPoint : public Error {
public:
    using Error::Error;
};

/// The enumeration domain exceeds the scan guard and no cap was given.
class DomainTooLarge : public Error {
public:
    using Error::Error;
};

/// A script error surfaced mid-run, annotated with the phase and generation.
class RunPhaseError : public Error {
public:
    using Error::Error;
};

} // namespace gasolve
