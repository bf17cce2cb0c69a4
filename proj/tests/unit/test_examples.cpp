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


#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/examples.hpp"
#include "nilaut/group.hpp"
#include "nilaut/report_json.hpp"

using namespace nilaut;

TEST_CASE("every example verifies") {
  for (const auto& id : example_ids()) {
    INFO(id);
    const auto rep = verify_example(id);
    CHECK(rep.verified());
    CHECK(rep.equality);
    CHECK_NOTHROW(require_verified(rep));
    const auto grp = example_group(id);
    CHECK(grp.table.order() == static_cast<std::size_t>(rep.order));
    CHECK(is_nilpotent(grp.table));
    CHECK(divisor_normal_subgroup_property(grp.table));
  }
}

TEST_CASE("octahedral example") {
  const auto rep = verify_example("r3-kummer");
  CHECK(rep.field_p == 3);
  CHECK(rep.field_k == 2);
  CHECK(rep.genus == 2);
  CHECK(rep.type == std::vector<std::int64_t>{2, 4, 8});
  CHECK(rep.order == 16);
  CHECK(rep.bound == "16(g-1)");
}

TEST_CASE("four-place example") {
  const auto rep = verify_example("r4-kummer");
  CHECK(rep.genus == 2);
  CHECK(rep.type == std::vector<std::int64_t>{2, 2, 2, 4});
  CHECK(rep.order == 8);
}

TEST_CASE("two-place examples") {
  const auto a = verify_example("r2-p2");
  CHECK(a.field_p == 2);
  CHECK(a.genus == 2);
  CHECK(a.type == std::vector<std::int64_t>{5, 10});
  CHECK(a.order == 10);
  const auto b = verify_example("r2-p5");
  CHECK(b.field_p == 5);
  CHECK(b.genus == 2);
  CHECK(b.type == std::vector<std::int64_t>{2, 10});
  CHECK(b.order == 10);
}

TEST_CASE("single-place family") {
  ExampleParams p5{5, 1};
  const auto a = verify_example("r1", p5);
  CHECK(a.genus == 10);
  CHECK(a.order == 125);
  CHECK(a.verified());
  ExampleParams p7{7, 1};
  const auto b = verify_example("r1", p7);
  CHECK(b.genus == 21);
  CHECK(b.order == 343);
  ExampleParams p3n2{3, 2};
  const auto c = verify_example("r1", p3n2);
  CHECK(c.genus == 9);
  CHECK(c.order == 243);
}

TEST_CASE("example reports are reproducible") {
  const auto a = to_json(verify_example("r3-kummer")).dump();
  const auto b = to_json(verify_example("r3-kummer")).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK(j["exampleId"] == "r3-kummer");
  CHECK(j["field"]["p"] == 3);
  CHECK(j["type"] == std::vector<int>{2, 4, 8});
}

TEST_CASE("unknown example ids and bad parameters") {
  CHECK_THROWS_AS(verify_example("nope"), std::invalid_argument);
  ExampleParams bad{4, 1};
  CHECK_THROWS(verify_example("r1", bad));
  ExampleParams big{11, 3};
  CHECK_THROWS_AS(verify_example("r1", big), TooLarge);
}
