#pragma once

#include <stdexcept>
#include <string>

namespace leafcoh {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside its admissible range, negative radicand, weight outside 𝕄.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A 4-weight block window that leaves the weight set.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Two-form coefficients supplied in the wrong coordinate convention.
class GaugeError : public Error {
 public:
  using Error::Error;
};

/// Input violates the hypothesis of an operation (excluded class, trivial class).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Least-squares preimage did not reach the tolerance at the window cap.
class NoCertificateError : public Error {
 public:
  NoCertificateError(const std::string& what, double best_residual, double conditioning)
      : Error(what), best_residual_(best_residual), conditioning_(conditioning) {}
  double best_residual() const noexcept { return best_residual_; }
  double conditioning() const noexcept { return conditioning_; }

 private:
  double best_residual_;
  double conditioning_;
};

/// A vanishing block determinant inside a spectrum that should not have one.
class DegenerateSpectrumError : public Error {
 public:
  DegenerateSpectrumError(const std::string& what, int twice_m, double q)
      : Error(what), twice_m_(twice_m), q_(q) {}
  int twice_m() const noexcept { return twice_m_; }
  double q() const noexcept { return q_; }

 private:
  int twice_m_;
  double q_;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class SpectrumShapeError : public Error {
 public:
  using Error::Error;
};

/// Rank/dimension constraints of an exact sequence that cannot all hold.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class EigenvectorError : public Error {
 public:
  using Error::Error;
};

}  // namespace leafcoh
