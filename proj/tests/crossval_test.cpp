// Copyright 2026 The hofg Authors
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

#include "hofg/crossval.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hofg/error.hpp"

namespace hofg {
namespace {

TEST(RunChecksTest, AllSuitesPassOnASmallRange) {
  const auto results = run_checks(20'000, {}, 4);
  ASSERT_EQ(results.size(), check_names().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].name, check_names()[i]);
    EXPECT_TRUE(results[i].passed()) << results[i].name;
    EXPECT_GT(results[i].checked, 0u);
  }
}

TEST(RunChecksTest, SelectsByName) {
  const std::vector<std::string> names = {"zeckendorf", "g-phi"};
  const auto results = run_checks(1000, names, 1);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].name, "g-phi");
  EXPECT_EQ(results[1].name, "zeckendorf");
  EXPECT_EQ(results[1].checked, 1001u);
}

TEST(RunChecksTest, RejectsUnknownNames) {
  const std::vector<std::string> names = {"nope"};
  EXPECT_THROW(run_checks(10, names), DomainError);
  EXPECT_THROW(run_checks(kMemoLimit), DomainError);
}

}  // namespace
}  // namespace hofg
