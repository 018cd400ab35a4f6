#pragma once

#include <stdexcept>
#include <string>

namespace rankvsm {

/// Failure categories. The CLI maps each one to its own exit code.
enum class ErrorCode {
  kInvalidArgument = 10,
  kDuplicateId = 11,
  kEmptyCorpus = 12,
  kEmptyDocument = 13,
  kUnknownTerm = 14,
  kUnknownDocument = 15,
  kLengthMismatch = 16,
  kNonFinite = 17,
  kDegenerateCorpus = 18,
  kIo = 20,
  kParse = 21,
  kConfig = 22,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankvsm
