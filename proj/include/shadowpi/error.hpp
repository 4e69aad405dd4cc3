#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace shadowpi {

enum class ErrorCode {
  EmptyDiagram,
  NonQuadrivalent,
  BrokenInvolution,
  DisconnectedCurve,
  EulerMismatch,
  UnknownDart,
  UnknownRegion,
  InvalidOrientation,
  HalfIntegerExponent,
  MissingLabels,
  InvalidCut,
  SelectionTouchesBoundary,
  SearchSpaceTooLarge,
  UnknownGenerator,
  TangencyOrTriplePoint,
  EndpointInInterior,
  OverlappingSegments,
  DisconnectedDivide,
  UnsupportedDegenerate,
  ConcurrentLines,
  DuplicateLines,
  NoIntersections,
  ParseError,
  SchemaMismatch,
  Usage,
};

std::string_view to_string(ErrorCode code);

// Every library failure surfaces as this type; the CLI turns it into
// {code, message, context} on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json context = nlohmann::json::object())
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& context() const noexcept { return context_; }

  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  nlohmann::json context_;
};

}  // namespace shadowpi
