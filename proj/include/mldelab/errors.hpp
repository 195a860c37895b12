#pragma once

#include <stdexcept>
#include <string>

namespace mldelab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// qseries
struct ZeroSeriesError : Error {
    explicit ZeroSeriesError(const std::string& what) : Error(what) {}
};
struct NonUnitLeadingError : Error {
    explicit NonUnitLeadingError(const std::string& what) : Error(what) {}
};
struct TruncationError : Error {
    explicit TruncationError(const std::string& what) : Error(what) {}
};
struct UnknownNameError : Error {
    explicit UnknownNameError(const std::string& what) : Error(what) {}
};

// mlde
struct NotAnIndicialRootError : Error {
    explicit NotAnIndicialRootError(const std::string& what) : Error(what) {}
};
struct ResonantStepError : Error {
    ResonantStepError(long step, const std::string& what) : Error(what), step(step) {}
    long step;
};
struct NonRationalRootsError : Error {
    explicit NonRationalRootsError(const std::string& what) : Error(what) {}
};

// symmetry
struct DegenerateDenominatorError : Error {
    explicit DegenerateDenominatorError(const std::string& what) : Error(what) {}
};
struct NotRationalSquareError : Error {
    explicit NotRationalSquareError(const std::string& what) : Error(what) {}
};
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& what) : Error(what) {}
};
struct DegenerateHError : Error {
    explicit DegenerateHError(const std::string& what) : Error(what) {}
};

// modforms
struct NotInSpanError : Error {
    explicit NotInSpanError(const std::string& what) : Error(what) {}
};

// hyper
struct PoleInLowerParameterError : Error {
    explicit PoleInLowerParameterError(const std::string& what) : Error(what) {}
};

// ratfun
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

} // namespace mldelab
