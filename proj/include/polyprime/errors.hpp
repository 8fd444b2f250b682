#pragma once

#include <stdexcept>
#include <string>

namespace polyprime {

// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- polynomial front-end ---

class SyntaxError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

// --- integer arithmetic ---

class NotPrime : public Error {
public:
    using Error::Error;
};

// Requested v_p(0), which is infinite.
class ZeroValuation : public Error {
public:
    using Error::Error;
};

class ModuliNotCoprime : public Error {
public:
    using Error::Error;
};

// The Pollard-rho iteration cap was reached before a factor appeared.
// Callers retry with a different input rather than looping forever.
class FactoringBudgetExceeded : public Error {
public:
    using Error::Error;
};

// --- certificates ---

class MalformedCertificate : public Error {
public:
    using Error::Error;
};

} // namespace polyprime
