#include "gha/error.hpp"

namespace gha {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnsortedValues: return "UnsortedValues";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotCompleteTreeSize: return "NotCompleteTreeSize";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TooShallow: return "TooShallow";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ExpansionNotCertified: return "ExpansionNotCertified";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::EpsilonTooSmall: return "EpsilonTooSmall";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message,
             std::optional<std::int64_t> index)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

}  // namespace gha
