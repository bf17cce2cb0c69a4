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

#include "nilaut/report_json.hpp"

#include <limits>
#include <map>

namespace nilaut {

using nlohmann::json;

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json rational_json(const Rational& r) {
  return {{"num", big_json(r.num())}, {"den", big_json(r.den())}};
}

json to_json(const Verdict& v) {
  json viol = json::array();
  for (const auto& x : v.violations) {
    viol.push_back({{"rule", rule_id(x.rule)}, {"reason", x.reason}});
  }
  return {{"admissible", v.admissible()}, {"conditional", v.conditional},
          {"violations", viol}};
}

json to_json(const RatioReport& r) {
  json j;
  j["signature"] = r.signature.indices();
  j["char"] = r.signature.characteristic().value();
  j["ratio"] = r.ratio_sup ? rational_json(*r.ratio_sup) : json(nullptr);
  const auto g = r.minimal_genus();
  j["minimalGenus"] = g ? big_json(*g) : json(nullptr);
  j["extremal"] = r.extremal;
  j["bracket"] = rational_json(r.bracket);
  if (r.attained_by) {
    j["attainedBy"] = {{"order", r.attained_by->order},
                       {"genus", big_json(r.attained_by->genus)}};
  }
  if (r.slack) {
    j["slack"] = {{"order", r.slack->order},
                  {"genus", big_json(r.slack->genus)},
                  {"ratio", rational_json(r.slack->ratio)},
                  {"differents", r.slack->differents}};
  }
  return j;
}

json to_json(const CoverageNote& n) {
  json j{{"r", n.r}, {"char", n.p.value()}, {"prefix", n.prefix}, {"merged", n.merged},
         {"text", n.text()}};
  j["tailSup"] = n.tail_sup ? rational_json(*n.tail_sup) : json(nullptr);
  j["tailLimit"] = n.tail_limit ? rational_json(*n.tail_limit) : json(nullptr);
  return j;
}

json to_json(const Certificate& c) {
  json ext = json::array(), viol = json::array(), slack = json::array(),
       tails = json::array();
  for (const auto& r : c.extremal) ext.push_back(to_json(r));
  for (const auto& r : c.violations) viol.push_back(to_json(r));
  for (const auto& r : c.slack_violations) slack.push_back(to_json(r));
  for (const auto& n : c.tail_violations) tails.push_back(to_json(n));
  return {{"r", c.r},
          {"bound", rational_json(c.bound)},
          {"holds", c.holds()},
          {"holdsBeyondCaps", c.holds_beyond_caps()},
          {"extremal", ext},
          {"violations", viol},
          {"slackViolations", slack},
          {"tailViolations", tails},
          {"reported", c.sweep.reports.size()},
          {"unbounded", c.sweep.unbounded.size()},
          {"notes", c.sweep.notes.size()},
          {"leaves", c.sweep.stats.leaves}};
}

json to_json(const ExampleReport& r) {
  json rel = json::array();
  for (const auto& x : r.relations) {
    rel.push_back({{"lhs", x.lhs}, {"rhs", x.rhs}, {"holds", x.holds}});
  }
  return {{"schema", kJsonSchema},
          {"exampleId", r.example_id},
          {"field", {{"p", r.field_p}, {"k", r.field_k}, {"description", r.field_description}}},
          {"tower", r.tower},
          {"genus", r.genus},
          {"type", r.type},
          {"order", r.order},
          {"bound", r.bound},
          {"equality", r.equality},
          {"verified", r.verified()},
          {"relations", rel},
          {"notes", r.notes}};
}

json to_json(const LadderRow& row) {
  json j{{"level", row.level},
         {"genusMinusOne", {{"mantissa", big_json(row.genus_minus_one.mantissa)},
                            {"exponent", big_json(row.genus_minus_one.exponent)}}},
         {"degree", {{"mantissa", big_json(row.degree.mantissa)},
                     {"exponent", big_json(row.degree.exponent)}}}};
  const auto g = row.genus();
  j["genus"] = g && g->str().size() <= 40 ? big_json(*g) : json(row.genus_minus_one.str() + "+1");
  j["ratio"] = rational_json(ladder_ratio(row));
  return j;
}

json group_json(const CayleyTable& t) {
  std::map<std::size_t, std::size_t> hist;
  for (std::uint32_t a = 0; a < t.order(); ++a) ++hist[t.element_order(a)];
  json orders = json::object();
  for (const auto& [o, n] : hist) orders[std::to_string(o)] = n;
  return {{"order", t.order()},
          {"nilpotent", is_nilpotent(t)},
          {"lowerCentralSeries", lower_central_series(t)},
          {"divisorNormalSubgroups", divisor_normal_subgroup_property(t)},
          {"elementOrders", orders}};
}

json document(const std::string& key, json payload) {
  return {{"schema", kJsonSchema}, {key, std::move(payload)}};
}

}  // namespace nilaut
