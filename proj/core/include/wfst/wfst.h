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

#ifndef WFST_WFST_H_
#define WFST_WFST_H_

#include "wfst/algorithms.h"
#include "wfst/any_fst.h"
#include "wfst/autodiff.h"
#include "wfst/axioms.h"
#include "wfst/draw.h"
#include "wfst/errors.h"
#include "wfst/featurized.h"
#include "wfst/fst.h"
#include "wfst/label.h"
#include "wfst/semiring.h"
#include "wfst/semirings.h"
#include "wfst/text_io.h"
#include "wfst/training.h"

#endif  // WFST_WFST_H_
