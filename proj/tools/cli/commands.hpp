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

#include <ostream>
#include <span>
#include <string>

#include "metafib/verify.hpp"

namespace metafib::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest index any command will tabulate.
inline constexpr Index kMaxIndex = 10'000'000;
inline constexpr std::size_t kMaxSeriesOrder = std::size_t{1} << 16;
inline constexpr Index kMaxTableRows = 64;
inline constexpr Index kMaxGreedyLeaves = 4096;

struct Hooks {
    VerifyPrimitives primitives;
};

/// Runs one command line (without the program name). Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace metafib::cli
