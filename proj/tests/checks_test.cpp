// Copyright 2026 The realqm Authors
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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "realqm/checks.hpp"

namespace realqm {
namespace {

TEST(Checks, DefaultSeedPassesEveryFamily) {
  const auto results = run_checks("all", CheckOptions{});
  std::set<std::string> families;
  for (const InvariantResult& r : results) {
    families.insert(r.family);
    EXPECT_TRUE(r.passed()) << r.family << "/" << r.name << " residual " << r.max_residual;
    EXPECT_GT(r.samples, 0u) << r.name;
  }
  EXPECT_EQ(families.size(), check_families().size());
}

TEST(Checks, OtherUnitsAndSeedsPass) {
  CheckOptions opts;
  opts.seed = 12345;
  opts.params = OscillatorParams{2.5, 0.4, 0.3};
  for (const InvariantResult& r : run_checks("all", opts))
    EXPECT_TRUE(r.passed()) << r.family << "/" << r.name << " residual " << r.max_residual;
}

TEST(Checks, Deterministic) {
  CheckOptions opts;
  opts.seed = 7;
  const auto a = run_checks("all", opts);
  const auto b = run_checks("all", opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].max_residual, b[i].max_residual);
  }
}

TEST(Checks, SingleFamilyMatchesFullRun) {
  CheckOptions opts;
  opts.seed = 3;
  const auto all = run_checks("all", opts);
  const auto tensor = run_checks("tensor", opts);
  ASSERT_FALSE(tensor.empty());
  for (const InvariantResult& r : tensor) {
    EXPECT_EQ(r.family, "tensor");
    const auto it = std::find_if(all.begin(), all.end(), [&](const InvariantResult& x) {
      return x.family == r.family && x.name == r.name;
    });
    ASSERT_NE(it, all.end());
    EXPECT_EQ(it->max_residual, r.max_residual);
  }
}

TEST(Checks, OverTightenedToleranceFails) {
  CheckOptions opts;
  opts.tolerance_override = 1e-20;
  const auto results = run_checks("kernel", opts);
  const bool any_failed = std::any_of(results.begin(), results.end(),
                                      [](const InvariantResult& r) { return !r.passed(); });
  EXPECT_TRUE(any_failed);
  for (const InvariantResult& r : results) EXPECT_EQ(r.threshold, 1e-20);
}

TEST(Checks, CountingInvariantsKeepZeroThreshold) {
  CheckOptions opts;
  opts.tolerance_override = 1.0;
  for (const InvariantResult& r : run_checks("realification", opts))
    if (r.name == "generator_space_ranks") {
      EXPECT_EQ(r.threshold, 0.0);
    }
}

TEST(Checks, UnknownSuite) { EXPECT_THROW(run_checks("nonsense", CheckOptions{}), DomainError); }

}  // namespace
}  // namespace realqm
