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

#include <stdexcept>
#include <string>

namespace irsperf {

/// Argument outside the mathematical domain of an operation, or a violated
/// precondition on a domain object.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative evaluation (quadrature, contour integral, series) did not
/// reach the requested tolerance within its budget.
class NumericConvergenceError : public std::runtime_error {
public:
    NumericConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    /// Error estimate at the point the evaluation gave up.
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = -1, std::string key = {})
        : std::runtime_error(what), line_(line), key_(std::move(key)) {}

    /// 1-based line in the configuration file, or -1 when unknown.
    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    int line_;
    std::string key_;
};

namespace detail {
[[noreturn]] void throw_domain(const std::string& where, const std::string& what);
}

}  // namespace irsperf
