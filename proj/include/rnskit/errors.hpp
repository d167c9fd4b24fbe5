#pragma once

#include <stdexcept>
#include <string>

namespace rnskit {

/// Base class for all rnskit errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An input that makes the requested operation meaningless (empty moduli
/// list, gcd(0,0), cost report for n = 0).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// A stated precondition does not hold (non-coprime identity inputs,
/// modulus below 2 in mod_inverse, negative loose digits).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A modulus smaller than 2 was passed to build_moduli_set.
class InvalidModulusError : public Error {
public:
    using Error::Error;
};

/// Two moduli share a common factor. Message names the offending pair.
class NotCoprimeError : public Error {
public:
    using Error::Error;
};

/// mod_inverse was asked for an element with gcd(a, m) != 1.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// A value or residue lies outside its admissible range.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Two values bound to different moduli sets were combined.
class SetMismatchError : public Error {
public:
    using Error::Error;
};

/// Building the lookup tables would exceed the configured entry cap.
class TableTooLargeError : public Error {
public:
    using Error::Error;
};

/// A parameter outside the supported domain (e.g. special triple n < 2).
class UnsupportedParameterError : public Error {
public:
    using Error::Error;
};

} // namespace rnskit
