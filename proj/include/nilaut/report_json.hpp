// Copyright 2026 The nilaut Authors
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

// JSON documents for reports. Top-level documents carry "schema": 1.
// Integers that do not fit in 64 bits are written as decimal strings.

#ifndef NILAUT_REPORT_JSON_HPP
#define NILAUT_REPORT_JSON_HPP

#include "json.hpp"
#include "nilaut/admissibility.hpp"
#include "nilaut/examples.hpp"
#include "nilaut/group.hpp"
#include "nilaut/ladder.hpp"
#include "nilaut/search.hpp"

namespace nilaut {

inline constexpr int kJsonSchema = 1;

nlohmann::json big_json(const BigInt& v);
nlohmann::json rational_json(const Rational& r);  // {num, den}

nlohmann::json to_json(const Verdict& v);
/// {signature, char, ratio, minimalGenus, extremal, ...}; ratio is null for
/// unbounded candidates.
nlohmann::json to_json(const RatioReport& r);
nlohmann::json to_json(const CoverageNote& n);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ExampleReport& r);
nlohmann::json to_json(const LadderRow& row);

/// Order, nilpotency class data and element-order histogram of a table.
nlohmann::json group_json(const CayleyTable& t);

/// Wraps a payload as {"schema": 1, key: payload}.
nlohmann::json document(const std::string& key, nlohmann::json payload);

}  // namespace nilaut

#endif  // NILAUT_REPORT_JSON_HPP
