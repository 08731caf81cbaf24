#pragma once

#include <stdexcept>
#include <string>

namespace mgof {

// Model parameters outside the admissible set; the message names the violated
// inequality.
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not defined for the model family (e.g. the residual link of a
// GARCH or SV process).
class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Singular or otherwise failed parameter estimation.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Residual pool unusable for resampling (e.g. zero variance in the ARCH case).
class DegeneratePool : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bootstrap resample kept failing to refit after the retry budget.
class BootstrapAborted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mgof
