#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecdp {

using Vertex = std::int32_t;
using ColorId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

/// Which disjointness notion a solution must satisfy.
///   Cdp:  paths pairwise internally vertex-disjoint.
///   Cddp: additionally certified by pairwise distinct colors.
enum class Mode { Cdp, Cddp };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Error hierarchy. Solvers throw PreconditionError when a structural requirement
// of the algorithm does not hold on the input; the CLI maps it to exit code 2.
class EcdpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public EcdpError {
 public:
  using EcdpError::EcdpError;
};

class PreconditionError : public EcdpError {
 public:
  using EcdpError::EcdpError;
};

/// Raised when an exhaustive enumeration exceeds its configured cap.
class OverflowError : public EcdpError {
 public:
  OverflowError(const std::string& what, std::size_t cap) : EcdpError(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public EcdpError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : EcdpError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ecdp
