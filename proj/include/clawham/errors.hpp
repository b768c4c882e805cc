#pragma once

#include <stdexcept>
#include <string>

namespace clawham {

/// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded; never silently approximated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public InvalidInput {
 public:
  enum class Kind { kMalformedHeader, kTruncated, kCharOutOfRange, kTooLarge, kTrailingData };

  Graph6Error(Kind kind, const std::string& what) : InvalidInput(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Raised by root reconstruction; `certificate()` names the obstruction.
class NotALineGraph : public Error {
 public:
  NotALineGraph(const std::string& what, std::string certificate)
      : Error(what), certificate_(std::move(certificate)) {}
  const std::string& certificate() const noexcept { return certificate_; }

 private:
  std::string certificate_;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class LiftError : public Error {
 public:
  enum class Kind { kNotCollapsible, kMissingContractedVertex, kInvalidTrail, kParityWitnessMissing };

  LiftError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace clawham
