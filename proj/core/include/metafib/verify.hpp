// Copyright 2026 The metafib Authors
//
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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "metafib/sequences.hpp"

namespace metafib {

// Cross-module identity suite. Each check compares two independent
// computations over a range fixed by the depth preset.

enum class VerifyDepth { quick, full };

/// Primitives the checks treat as the thing under test. Replacing one lets
/// callers confirm that the suite notices a broken implementation.
struct VerifyPrimitives {
    std::function<Index(Index)> ruler = [](Index n) { return metafib::ruler(n); };
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample when failed
    double seconds = 0.0;
};

/// Names of all checks, in report order.
std::vector<std::string> verification_check_names();

/// Runs every check. The report order is fixed.
std::vector<CheckResult> run_verification(VerifyDepth depth, const VerifyPrimitives& prims = {});

}  // namespace metafib
