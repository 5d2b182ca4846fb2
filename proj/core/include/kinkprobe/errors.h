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

#ifndef KINKPROBE_ERRORS_H
#define KINKPROBE_ERRORS_H

#include <stdexcept>

namespace kinkprobe {

/// Arguments violate a documented precondition (bad index, beta <= 0, grid mismatch, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested problem size exceeds what an exact method can handle.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// The requested combination has no implementation on this path; the message names the fallback.
struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A signal-processing estimate could not be formed from the supplied data.
struct EstimationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kinkprobe

#endif
