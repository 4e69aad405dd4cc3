#include "shadowpi/error.hpp"

namespace shadowpi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::NonQuadrivalent: return "NonQuadrivalent";
    case ErrorCode::BrokenInvolution: return "BrokenInvolution";
    case ErrorCode::DisconnectedCurve: return "DisconnectedCurve";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
    case ErrorCode::UnknownDart: return "UnknownDart";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::InvalidOrientation: return "InvalidOrientation";
    case ErrorCode::HalfIntegerExponent: return "HalfIntegerExponent";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::SelectionTouchesBoundary: return "SelectionTouchesBoundary";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::TangencyOrTriplePoint: return "TangencyOrTriplePoint";
    case ErrorCode::EndpointInInterior: return "EndpointInInterior";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::DisconnectedDivide: return "DisconnectedDivide";
    case ErrorCode::UnsupportedDegenerate: return "UnsupportedDegenerate";
    case ErrorCode::ConcurrentLines: return "ConcurrentLines";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::NoIntersections: return "NoIntersections";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

nlohmann::json Error::to_json() const {
  return {{"code", std::string(to_string(code_))}, {"message", what()}, {"context", context_}};
}

}  // namespace shadowpi
