#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fltree {

enum class ErrorKind {
  Syntax,
  DuplicateLabel,
  EmptyLabel,
  InvalidLabel,
  UnknownLabel,
  InvalidTree,
  InvalidOperation,
  WrongParent,
  DescendantTarget,
  NonBijective,
  LabelSetMismatch,
  RootMismatch,
  NotIsomorphic,
  SizeLimitExceeded,
  InvalidInstance,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers can branch
/// on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the tree and script parsers; `position` is a 0-based byte
/// offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fltree
