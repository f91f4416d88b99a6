// Copyright 2026 The vilenkin Authors
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

#pragma once

#include <cstdint>
#include <functional>

namespace vilenkin {

// Worker count: VILENKIN_THREADS if set (>= 1), else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, count). Each index must write only its own
// output slot; callers reduce the slots afterwards in index order, so the
// result never depends on scheduling.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

}  // namespace vilenkin
