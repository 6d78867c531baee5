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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace irsperf::cli {

/// A CSV result: '#' comment lines, a column header, then numeric rows.
/// Missing cells (for example a policy that was not requested) stay empty.
struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    std::size_t column(const std::string& name) const;  // throws std::out_of_range
    std::optional<double> at(std::size_t row, const std::string& name) const;

    /// Comma separated, '.' decimal point, 12 significant digits.
    std::string to_csv() const;
};

/// "%.12g" in the C locale.
std::string format_number(double value);

}  // namespace irsperf::cli
