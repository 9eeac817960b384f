#include "vqcrypt/error.hpp"

namespace vqcrypt {

const char* to_string(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kBadMagic: return "bad magic";
    case CorruptionKind::kBadVersion: return "bad version";
    case CorruptionKind::kBadFlags: return "bad flags";
    case CorruptionKind::kBadHeader: return "bad header";
    case CorruptionKind::kTruncated: return "truncated";
    case CorruptionKind::kTrailingBytes: return "trailing bytes";
    case CorruptionKind::kIndexOutOfRange: return "index out of range";
  }
  return "unknown";
}

}  // namespace vqcrypt
