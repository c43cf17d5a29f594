#pragma once

#include <stdexcept>
#include <string>

namespace medisk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The norm's unit circle contains a segment (or the exponent is out of (1, inf)).
class NotStrictlyConvex : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class NoIntersection : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class DegenerateLine : public Error {
public:
    using Error::Error;
};

class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

/// Two norm-right vertices in one triangle; impossible for a strictly convex norm.
class StrictConvexityViolation : public Error {
public:
    using Error::Error;
};

/// A solver reached a state its invariants rule out.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace medisk
