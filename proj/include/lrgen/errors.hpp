#pragma once

#include <stdexcept>
#include <string>

namespace lrgen {

/// Base class for all errors raised by the library. The message always
/// names the violated invariant or guard first, e.g. "NotContained: ...".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input could not be parsed; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError at " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

/// gamma is not componentwise contained in beta.
class NotContained : public Error {
public:
    explicit NotContained(const std::string& what) : Error("NotContained: " + what) {}
};

/// Some row violates gamma_i <= beta_i <= gamma_i + 1.
class NotHorizontalStrip : public Error {
public:
    explicit NotHorizontalStrip(const std::string& what)
        : Error("NotHorizontalStrip: " + what) {}
};

/// An operation restricted to objects without P1^0 summands got one.
class NotInS1 : public Error {
public:
    explicit NotInS1(const std::string& what) : Error("NotInS1: " + what) {}
};

/// hom_leq compares only objects with equal invariants (a, b).
class IncomparableInvariants : public Error {
public:
    explicit IncomparableInvariants(const std::string& what)
        : Error("IncomparableInvariants: " + what) {}
};

/// The matrix fed to jordan_type is not nilpotent.
class NotNilpotent : public Error {
public:
    explicit NotNilpotent(const std::string& what) : Error("NotNilpotent: " + what) {}
};

/// A brute-force enumeration would exceed the configured guard.
class SearchSpaceTooLarge : public Error {
public:
    explicit SearchSpaceTooLarge(const std::string& what)
        : Error("SearchSpaceTooLarge: " + what) {}
};

/// The end_dim minimizer among extensions is not unique; signals a bug.
class NonUniqueMinimum : public Error {
public:
    explicit NonUniqueMinimum(const std::string& what)
        : Error("NonUniqueMinimum: " + what) {}
};

} // namespace lrgen
