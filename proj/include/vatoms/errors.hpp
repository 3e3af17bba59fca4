#pragma once

#include <stdexcept>
#include <string>

namespace vatoms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};
struct NotHermitianError : Error {
    using Error::Error;
};
struct InvalidStateError : Error {
    using Error::Error;
};
struct AlphaOutOfRangeError : Error {
    using Error::Error;
};
struct BadProbabilityVectorError : Error {
    using Error::Error;
};
struct BadGeometryError : Error {
    using Error::Error;
};
struct BadCouplingsError : Error {
    using Error::Error;
};
struct OutOfDomainError : Error {
    using Error::Error;
};
struct NotAStateError : Error {
    using Error::Error;
};
struct PatternViolationError : Error {
    using Error::Error;
};
struct RefinementStallError : Error {
    using Error::Error;
};

// Integration produced a state that fails validation; carries the offending time.
struct StepTooLargeError : Error {
    StepTooLargeError(const std::string& what, double t) : Error(what), time(t) {}
    double time;
};

}  // namespace vatoms
