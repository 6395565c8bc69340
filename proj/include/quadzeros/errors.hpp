#ifndef QUADZEROS_ERRORS_HPP
#define QUADZEROS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadzeros {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parameters violate a documented precondition (sign hypotheses, ranges, caps).
class InvalidParams : public Error {
   public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
   public:
    ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class DegenerateLeadingCoefficient : public Error {
   public:
    using Error::Error;
};

class NotIsolating : public Error {
   public:
    using Error::Error;
};

/// Requested theta lies within the exclusion radius of the vertical asymptote.
class AsymptoteProximity : public Error {
   public:
    using Error::Error;
};

/// A result contradicts a proven structural property. Seeing one of these
/// means either the parameters are outside the theory or there is a bug.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

class NoRootInRegion : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

class BranchAmbiguity : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

class FactorizationMismatch : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

class UniqueRootViolation : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

class WitnessSearchFailed : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

class RootFinderFailure : public InvariantViolation {
   public:
    using InvariantViolation::InvariantViolation;
};

}  // namespace quadzeros

#endif  // QUADZEROS_ERRORS_HPP
