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

#include "wfst/errors.h"

namespace wfst {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSemiringMismatch: return "semiring-mismatch";
    case ErrorCode::kInvalidState: return "invalid-state";
    case ErrorCode::kInvalidLabel: return "invalid-label";
    case ErrorCode::kInvalidWeight: return "invalid-weight";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnsupportedOperation: return "unsupported-operation";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kDeterminizationLimit: return "determinization-limit";
    case ErrorCode::kNoAcceptingPath: return "no-accepting-path";
    case ErrorCode::kSamplingDeadEnd: return "sampling-dead-end";
    case ErrorCode::kInvalidSamplingWeight: return "invalid-sampling-weight";
    case ErrorCode::kCycleLimit: return "cycle-limit";
    case ErrorCode::kInvalidNode: return "invalid-node";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvariant: return "invariant";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : FstError(ErrorCode::kParse,
               line == 0 ? message
                         : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace wfst
