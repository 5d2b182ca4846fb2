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

#ifndef KINKPROBE_CLI_SVG_H
#define KINKPROBE_CLI_SVG_H

#include <string>

#include "kinkprobe/distribution.h"
#include "kinkprobe/probe_record.h"

namespace kinkprobe::cli {

/// Two panels: <sx>, <sy> against t on the left, P(x) bars on the right.
std::string render_svg(const ProbeRecord &record, const Distribution &dist, const std::string &title);

}  // namespace kinkprobe::cli

#endif
