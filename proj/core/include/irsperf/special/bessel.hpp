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

namespace irsperf::special {

/// Modified Bessel function of the second kind K_order(x) for order in
/// {0, 1, 2} and x > 0. Orders 0 and 1 come from the ascending series for
/// x <= 2 and Steed's continued fraction above; order 2 uses the recurrence
/// K2 = K0 + (2/x) K1. Underflows gracefully to 0 for very large x.
double bessel_k(int order, double x);

}  // namespace irsperf::special
