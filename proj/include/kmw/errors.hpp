#pragma once

#include <stdexcept>
#include <string>

namespace kmw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document, GCM axiom violation, bad node subset, rank mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested formula or check does not apply to the given data
/// (infinite stabilizer, wrong Dynkin type, non-dominant weight, ...).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound was hit before the computation finished.
class LimitError : public Error {
 public:
  using Error::Error;
};

class NonIntegralPairing : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class NotDominantIntegral : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class InfiniteStabilizer : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class NotFiniteType : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

/// The check needs a diagram of infinite type.
class FiniteType : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class WrongRank : public InapplicableError {
 public:
  using InapplicableError::InapplicableError;
};

class CapExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

class BudgetExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

}  // namespace kmw
