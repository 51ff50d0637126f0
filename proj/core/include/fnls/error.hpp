#pragma once

#include <stdexcept>
#include <string>

namespace fnls {

// Base class for every error raised by the library. The CLI maps the
// concrete type onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Parameter lies outside the regime where the underlying estimate holds
// (alpha <= 1/2 for the phase bound, s <= 1 for the DMVT bound, ...).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class UndefinedRatio : public Error {
 public:
  using Error::Error;
};

// The phase function vanished on a quadruple where it is used as a divisor.
class ResonantQuad : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class DegenerateEstimator : public Error {
 public:
  using Error::Error;
};

class BlowupDetected : public Error {
 public:
  BlowupDetected(double time, const std::string& what)
      : Error(what), time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace fnls
