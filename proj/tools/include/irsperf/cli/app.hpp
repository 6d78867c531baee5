// SPDX-License-Identifier: Apache-2.0
//
// irsperf: coverage and ergodic capacity analysis of IRS-assisted links
// Copyright (C) 2026 The irsperf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>

namespace irsperf::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kConfigurationError = 2,  // also bad flags and unwritable output
    kConvergenceFailure = 3,
};

/// Parses argv, runs one subcommand and writes its CSV or report. Diagnostics
/// go to `err`; results go to --out, or to `out` when --out is absent or "-".
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irsperf::cli
