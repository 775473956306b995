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

#include "wfst/push.h"
#include "wfst/transform.h"

#include <string>

namespace wfst {

ProjectSide ParseProjectSide(std::string_view name) {
  if (name == "input") return ProjectSide::kInput;
  if (name == "output") return ProjectSide::kOutput;
  throw InvalidArgumentError("project: side must be 'input' or 'output', got '" +
                             std::string(name) + "'");
}

PushDirection ParsePushDirection(std::string_view name) {
  if (name == "initial") return PushDirection::kInitial;
  if (name == "final") return PushDirection::kFinal;
  throw InvalidArgumentError("push: direction must be 'initial' or 'final', got '" +
                             std::string(name) + "'");
}

}  // namespace wfst
