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

#ifndef WFST_ALGORITHMS_H_
#define WFST_ALGORITHMS_H_

#include "wfst/compose.h"
#include "wfst/determinize.h"
#include "wfst/graph.h"
#include "wfst/path.h"
#include "wfst/push.h"
#include "wfst/random_path.h"
#include "wfst/rational.h"
#include "wfst/rmepsilon.h"
#include "wfst/shortest_distance.h"
#include "wfst/shortest_path.h"
#include "wfst/transform.h"

#endif  // WFST_ALGORITHMS_H_
