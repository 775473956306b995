// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Error types thrown by the library. Every error derives from FstError and
// carries an ErrorCode so front ends can map failures without string
// matching.

#ifndef WFST_ERRORS_H_
#define WFST_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfst {

enum class ErrorCode {
  kSemiringMismatch,
  kInvalidState,
  kInvalidLabel,
  kInvalidWeight,
  kInvalidArgument,
  kDomain,
  kUnsupportedOperation,
  kConvergence,
  kDeterminizationLimit,
  kNoAcceptingPath,
  kSamplingDeadEnd,
  kInvalidSamplingWeight,
  kCycleLimit,
  kInvalidNode,
  kParse,
  kInvariant,
};

std::string_view ErrorCodeName(ErrorCode code);

class FstError : public std::runtime_error {
 public:
  FstError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Convenience subclasses, one per code that callers commonly catch.
#define WFST_DEFINE_ERROR(Name, Code)                        \
  class Name : public FstError {                             \
   public:                                                   \
    explicit Name(const std::string& message)                \
        : FstError(ErrorCode::Code, message) {}              \
  }

WFST_DEFINE_ERROR(SemiringMismatchError, kSemiringMismatch);
WFST_DEFINE_ERROR(InvalidStateError, kInvalidState);
WFST_DEFINE_ERROR(InvalidLabelError, kInvalidLabel);
WFST_DEFINE_ERROR(InvalidWeightError, kInvalidWeight);
WFST_DEFINE_ERROR(InvalidArgumentError, kInvalidArgument);
WFST_DEFINE_ERROR(DomainError, kDomain);
WFST_DEFINE_ERROR(UnsupportedOperationError, kUnsupportedOperation);
WFST_DEFINE_ERROR(ConvergenceError, kConvergence);
WFST_DEFINE_ERROR(DeterminizationLimitError, kDeterminizationLimit);
WFST_DEFINE_ERROR(NoAcceptingPathError, kNoAcceptingPath);
WFST_DEFINE_ERROR(SamplingDeadEndError, kSamplingDeadEnd);
WFST_DEFINE_ERROR(InvalidSamplingWeightError, kInvalidSamplingWeight);
WFST_DEFINE_ERROR(CycleLimitError, kCycleLimit);
WFST_DEFINE_ERROR(InvalidNodeError, kInvalidNode);
WFST_DEFINE_ERROR(InvariantError, kInvariant);

#undef WFST_DEFINE_ERROR

// Parse failures remember the 1-based line they occurred on (0 if unknown).
class ParseError : public FstError {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wfst

#endif  // WFST_ERRORS_H_
