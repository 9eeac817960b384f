#pragma once

#include <stdexcept>
#include <string>

namespace vqcrypt {

/// Malformed image input (PGM header or payload).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape disagreement between values that must agree (dimensions, counts).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CorruptionKind {
  kBadMagic,
  kBadVersion,
  kBadFlags,
  kBadHeader,
  kTruncated,
  kTrailingBytes,
  kIndexOutOfRange,
};

const char* to_string(CorruptionKind kind);

/// Container or index data that cannot be a valid encoding.
class CorruptionError : public std::runtime_error {
 public:
  CorruptionError(CorruptionKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  CorruptionKind kind() const noexcept { return kind_; }

 private:
  CorruptionKind kind_;
};

}  // namespace vqcrypt
