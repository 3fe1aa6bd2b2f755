#pragma once

#include <stdexcept>
#include <string>

namespace thiele {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InvalidCommitteeSize : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct WeightsNotNonIncreasing : Error {
    using Error::Error;
};
struct WeightsNegative : Error {
    using Error::Error;
};
struct WeightsNotStrictlyDecreasingPositive : Error {
    using Error::Error;
};
struct RepresentationOverflow : Error {
    using Error::Error;
};
struct NotShifted : Error {
    using Error::Error;
};
struct DomainViolation : Error {
    using Error::Error;
};
struct NotLcWitness : Error {
    using Error::Error;
};
struct EmptyRowOrColumn : Error {
    using Error::Error;
};
struct DisconnectedSubtree : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct NoCover : Error {
    using Error::Error;
};

}  // namespace thiele
