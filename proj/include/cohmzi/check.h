// Copyright 2026 The cohmzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHMZI_CHECK_H
#define COHMZI_CHECK_H

#include <string>
#include <vector>

#include "cohmzi/optics.h"

namespace cohmzi {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    /// Splitter used by every matrix-level property. Tests swap in a perturbed
    /// matrix to see the suite fail.
    TransferMatrix beam_splitter = make_beam_splitter();
    unsigned seed = 12345;
    int random_trials = 1000;
};

/// Built-in invariant suite behind `cohmzi check`.
std::vector<PropertyResult> run_property_checks(const CheckOptions &options = {});

}  // namespace cohmzi

#endif
