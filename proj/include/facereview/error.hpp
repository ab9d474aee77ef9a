#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facereview {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (PGM, cascade, config, CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Image or window too small for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Out-of-domain scalar parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Box or coordinate outside the image it refers to.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Point configuration for which a ratio or fit is undefined.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace facereview
