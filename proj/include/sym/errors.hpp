#pragma once

#include <stdexcept>
#include <string>

namespace sym {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Geometry / representation errors.
class NotFullDimensional : public Error {
public:
  using Error::Error;
};

class Unbounded : public Error {
public:
  using Error::Error;
};

class EmptyOrLowerDimensional : public Error {
public:
  using Error::Error;
};

class NoInterior : public Error {
public:
  using Error::Error;
};

class OriginNotInterior : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ZeroScale : public Error {
public:
  using Error::Error;
};

class EmptyOrLowerDimensionalIntersection : public Error {
public:
  using Error::Error;
};

// Containment / measurement errors.
class NotContained : public Error {
public:
  using Error::Error;
};

class NotMinkowskiCentered : public Error {
public:
  using Error::Error;
};

class NotSymmetric : public Error {
public:
  using Error::Error;
};

// Construction / formula parameter errors.
class ParameterOutOfRange : public Error {
public:
  using Error::Error;
};

class EvenK : public Error {
public:
  using Error::Error;
};

class PrerequisiteFails : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// Scenario / reporting errors.
class UnknownScenario : public Error {
public:
  using Error::Error;
};

class BadParams : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Internal numeric failure (iteration caps, lost pivots, ...).
class NumericFailure : public Error {
public:
  using Error::Error;
};

}  // namespace sym
