#pragma once

#include <stdexcept>

namespace diagen {

/// Base for all engine-specific failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A candidate shape placement intersects an existing shape's interior.
struct OverlapRejection : Error {
  using Error::Error;
};

/// No applicable formula connects the requested target to the figure.
struct ChainDeadEnd : Error {
  using Error::Error;
};

/// A template section required by a composer has no entries.
struct TemplateMissing : Error {
  using Error::Error;
};

/// Distractor perturbations collapsed onto the answer after rounding.
struct DegenerateDistractors : Error {
  using Error::Error;
};

/// Output files already exist and no force flag was given.
struct OutputExists : Error {
  using Error::Error;
};

/// A record's annotation/text partition contradicts its chain.
struct AnnotationMismatch : Error {
  using Error::Error;
};

/// Bad configuration value or file.
struct ConfigError : Error {
  using Error::Error;
};

/// Malformed dataset file; the message carries file and line context.
struct ParseError : Error {
  using Error::Error;
};

/// The refinement backend could not be reached.
struct ClientUnavailable : Error {
  using Error::Error;
};

}  // namespace diagen
