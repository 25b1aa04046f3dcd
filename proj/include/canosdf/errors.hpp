#pragma once

#include <stdexcept>
#include <string>

namespace canosdf {

// Caller misuse: bad shapes, bad arguments, malformed files.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf surfaced from a numeric computation.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint/artifact version mismatch.
class VersionError : public std::runtime_error {
public:
  explicit VersionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training diverged (non-finite loss); carries the step index in the message.
class TrainingError : public std::runtime_error {
public:
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace canosdf
