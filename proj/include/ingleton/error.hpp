#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ingleton {

/// Failure categories shared by every module. The CLI maps these onto exit
/// codes: `TheoremViolation` is an audit failure, everything else is a
/// validation failure.
enum class ErrorKind {
    NonPrimeModulus,
    InverseOfZero,
    ElementOutOfRange,
    DimensionOutOfRange,
    AmbientTooLarge,
    SizeGuard,
    NotBiregular,
    DuplicateEdge,
    IndexOutOfRange,
    InvalidSubgraph,
    NumericalFailure,
    EmptySubset,
    EmptySubgraph,
    CompleteBipartite,
    InvalidDistribution,
    MissingKernelRow,
    RowNotNormalized,
    EmptyIndexSet,
    OverlappingSets,
    ZeroProbabilityAtom,
    ArityGuard,
    SyntaxError,
    UnknownVariableIndex,
    ZeroEntropyInput,
    DimensionGuard,
    NotSubsupported,
    NotUniformPair,
    BelowEpsilonThreshold,
    SearchSpaceTooLarge,
    InvalidArgument,
    ParseError,
    TheoremViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the expression parser; `position` is a 0-based byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected, const std::string& found);

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ingleton
