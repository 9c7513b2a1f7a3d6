#pragma once

#include <stdexcept>
#include <string>

namespace qsocle {

/// Thrown when a dense box model would need more points than the configured cap
/// allows.  Callers that sweep many cases catch this and mark the case skipped.
class BoxCapExceeded : public std::runtime_error {
public:
  explicit BoxCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a truncated numerical-semigroup computation cannot certify that
/// its truncation bound covers every degree the operation may produce.
class BoundViolation : public std::runtime_error {
public:
  explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qsocle
