#ifndef GIRTHFORGE_ERRORS_HPP
#define GIRTHFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace girthforge {

// Base for all library errors. CLI maps subclasses onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input/parameter validation (CLI exit code 1).
struct ValidationError : Error {
    using Error::Error;
};

struct NotPrimePower : ValidationError {
    explicit NotPrimePower(const std::string& m) : ValidationError("NotPrimePower: " + m) {}
};
struct DivisionByZero : ValidationError {
    DivisionByZero() : ValidationError("DivisionByZero: inverse of 0") {}
};
struct OutOfRange : ValidationError {
    explicit OutOfRange(const std::string& m) : ValidationError("OutOfRange: " + m) {}
};
struct DimensionMismatch : ValidationError {
    explicit DimensionMismatch(const std::string& m) : ValidationError("DimensionMismatch: " + m) {}
};
struct Overflow : ValidationError {
    explicit Overflow(const std::string& m) : ValidationError("Overflow: " + m) {}
};
struct BadParameters : ValidationError {
    explicit BadParameters(const std::string& m) : ValidationError("BadParameters: " + m) {}
};
struct NoPerfectMatching : ValidationError {
    explicit NoPerfectMatching(const std::string& m) : ValidationError("NoPerfectMatching: " + m) {}
};
struct NotAMatchingOrdering : ValidationError {
    explicit NotAMatchingOrdering(const std::string& m)
        : ValidationError("NotAMatchingOrdering: " + m) {}
};
struct DualityNotVerified : ValidationError {
    explicit DualityNotVerified(const std::string& m) : ValidationError("DualityNotVerified: " + m) {}
};
struct TauParity : ValidationError {
    explicit TauParity(const std::string& m) : ValidationError("TauParity: " + m) {}
};
struct SelfDualityRequired : ValidationError {
    explicit SelfDualityRequired(const std::string& m)
        : ValidationError("SelfDualityRequired: " + m) {}
};
struct SpecValidation : ValidationError {
    explicit SpecValidation(const std::string& m) : ValidationError("SpecValidation: " + m) {}
};
struct NoSuchEntry : ValidationError {
    explicit NoSuchEntry(const std::string& m) : ValidationError("NoSuchEntry: " + m) {}
};
struct WrongFieldCharacteristic : ValidationError {
    explicit WrongFieldCharacteristic(const std::string& m)
        : ValidationError("WrongFieldCharacteristic: " + m) {}
};

// Budget exhausted (CLI exit code 2).
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& m) : Error("ResourceLimit: " + m) {}
};

// Filesystem trouble (CLI exit code 3).
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("IoError: " + m) {}
};

// Unreadable input file (CLI exit code 4).
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError: " + m) {}
};

}  // namespace girthforge

#endif
