#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gha {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  LengthMismatch,
  UnsortedValues,
  NotABijection,
  TooLarge,
  NotATree,
  Disconnected,
  NotCompleteTreeSize,
  OutOfRange,
  TooShallow,
  ParityViolation,
  ExpansionNotCertified,
  NotRegular,
  BadParameters,
  EpsilonTooSmall,
  InvalidWitness,
  UnsupportedFamily,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Single exception type for the library. `index()` names the offending
/// vertex, edge or value position when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::int64_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> index_;
};

}  // namespace gha
