// Copyright 2026 The robustflow Authors
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

#ifndef ROBUSTFLOW_RATIONAL_H_
#define ROBUSTFLOW_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace robustflow {

// All flow values, capacities and objective values are exact rationals.
using Rational = mpq_class;

// Renders "p/q", or "p" when the denominator is one.
std::string ToString(const Rational& value);

// Accepts "p", "p/q" and "-p/q". Throws Error(kInvalidArgument) otherwise.
Rational ParseRational(std::string_view text);

// Decimal approximation, for human-facing CSV columns only.
double ToDouble(const Rational& value);

// Least common multiple of the denominators; 1 for integers.
Rational DenominatorLcm(const Rational& a, const Rational& b);

bool IsIntegral(const Rational& value);

}  // namespace robustflow

#endif  // ROBUSTFLOW_RATIONAL_H_
