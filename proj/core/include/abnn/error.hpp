#pragma once

#include <stdexcept>
#include <string>

namespace abnn {

// Library-wide exception. The message carries the failing operation and the
// offending values; callers that need to branch can use the code.
class Error : public std::runtime_error {
 public:
  enum class Code {
    Generic,
    Shape,
    Value,
    Format,       // malformed file contents
    Version,      // checkpoint version mismatch
    Truncated,    // file shorter than declared
    Checksum,     // CRC mismatch
    Divergence,   // training produced a non-finite or runaway loss
    Config,       // run-config schema violation
  };

  explicit Error(std::string msg, Code code = Code::Generic)
      : std::runtime_error(std::move(msg)), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace abnn
