// Copyright 2026 The kinkprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "kinkprobe/parallel.h"
#include "test_util.h"

namespace kinkprobe {
namespace {

TEST(ParallelFor, VisitsEveryIndexOnce) {
    testutil::ScopedThreads t(4);
    EXPECT_EQ(worker_count(), 4);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto &h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}

TEST(ParallelFor, EmptyRangeIsNoop) {
    bool called = false;
    parallel_for(0, [&](std::size_t) { called = true; });
    EXPECT_FALSE(called);
}

TEST(ParallelFor, RethrowsWorkerException) {
    for (int threads : {1, 3}) {
        testutil::ScopedThreads t(threads);
        EXPECT_THROW(parallel_for(50,
                                  [](std::size_t i) {
                                      if (i == 17) {
                                          throw std::domain_error("boom");
                                      }
                                  }),
                     std::domain_error);
    }
}

TEST(WorkerCount, IgnoresInvalidOverride) {
    testutil::ScopedThreads t(0);
    EXPECT_GE(worker_count(), 1);
}

}  // namespace
}  // namespace kinkprobe
