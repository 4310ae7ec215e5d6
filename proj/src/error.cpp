#include "ingleton/error.hpp"

namespace ingleton {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorKind::InverseOfZero: return "InverseOfZero";
        case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
        case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorKind::AmbientTooLarge: return "AmbientTooLarge";
        case ErrorKind::SizeGuard: return "SizeGuard";
        case ErrorKind::NotBiregular: return "NotBiregular";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidSubgraph: return "InvalidSubgraph";
        case ErrorKind::NumericalFailure: return "NumericalFailure";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::EmptySubgraph: return "EmptySubgraph";
        case ErrorKind::CompleteBipartite: return "CompleteBipartite";
        case ErrorKind::InvalidDistribution: return "InvalidDistribution";
        case ErrorKind::MissingKernelRow: return "MissingKernelRow";
        case ErrorKind::RowNotNormalized: return "RowNotNormalized";
        case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
        case ErrorKind::OverlappingSets: return "OverlappingSets";
        case ErrorKind::ZeroProbabilityAtom: return "ZeroProbabilityAtom";
        case ErrorKind::ArityGuard: return "ArityGuard";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariableIndex: return "UnknownVariableIndex";
        case ErrorKind::ZeroEntropyInput: return "ZeroEntropyInput";
        case ErrorKind::DimensionGuard: return "DimensionGuard";
        case ErrorKind::NotSubsupported: return "NotSubsupported";
        case ErrorKind::NotUniformPair: return "NotUniformPair";
        case ErrorKind::BelowEpsilonThreshold: return "BelowEpsilonThreshold";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TheoremViolation: return "TheoremViolation";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& expected, const std::string& found)
    : Error(ErrorKind::SyntaxError,
            "at position " + std::to_string(position) + ": expected " + expected + ", found " + found),
      position_(position),
      expected_(expected) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ingleton
