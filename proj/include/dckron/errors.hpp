#pragma once

#include <stdexcept>
#include <string>

namespace dckron {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.dgnet` or matrix text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A network or matrix violates a structural contract (roles, sizes,
/// labels).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Requested retained/eliminated split is not admissible.
class PartitionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Matrix does not have the Laplacian sign pattern / zero row sums.
/// `property()` names the first violated property.
class NotALaplacian : public ValidationError {
 public:
  explicit NotALaplacian(std::string property)
      : ValidationError("not a Laplacian: " + property),
        property_(std::move(property)) {}
  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

/// Reachability precheck failed: some eliminated vertex cannot reach the
/// retained set, so the Schur complement does not exist.
class NotReducible : public Error {
 public:
  using Error::Error;
};

/// LU on the eliminated block hit a pivot below threshold.
class SingularBlock : public Error {
 public:
  using Error::Error;
};

/// Iterative elimination met a vanishing 1x1 pivot.
class ZeroPivot : public Error {
 public:
  ZeroPivot(std::size_t step, std::string vertex)
      : Error("zero pivot at step " + std::to_string(step) + " (vertex " +
              vertex + ")"),
        step_(step),
        vertex_(std::move(vertex)) {}
  std::size_t step() const noexcept { return step_; }
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::size_t step_;
  std::string vertex_;
};

class UnorientableLine : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dckron
