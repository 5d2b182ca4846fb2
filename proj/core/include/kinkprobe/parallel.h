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

#ifndef KINKPROBE_PARALLEL_H
#define KINKPROBE_PARALLEL_H

#include <cstddef>
#include <functional>

namespace kinkprobe {

/// Hardware concurrency, or the KINKPROBE_THREADS environment variable when
/// it holds a positive integer (which may exceed the core count).
int worker_count();

/// Calls body(i) for every i in [0, count), spread over worker_count() threads.
///
/// Callers write results by index, so output order never depends on scheduling.
/// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace kinkprobe

#endif
