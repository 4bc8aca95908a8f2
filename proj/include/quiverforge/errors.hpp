#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quiverforge {

/// Malformed input: bad JSON, unknown ids, shape errors, unsupported algebra.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed certificate did not hold.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decision procedure hit its resource caps.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pipeline stage failed; `stage` names it and `cause` keeps the category
/// of the underlying failure so callers can map it to an exit code.
class StageError : public std::runtime_error {
 public:
  enum class Cause { input, certificate, undecided };

  StageError(std::string stage, const std::string& what, Cause cause)
      : std::runtime_error(stage + ": " + what),
        stage_(std::move(stage)),
        cause_(cause) {}

  const std::string& stage() const noexcept { return stage_; }
  Cause cause() const noexcept { return cause_; }

 private:
  std::string stage_;
  Cause cause_;
};

}  // namespace quiverforge
