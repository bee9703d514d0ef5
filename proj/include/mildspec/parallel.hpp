// Copyright 2026 The mildspec Authors.
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

#ifndef MILDSPEC_PARALLEL_HPP_
#define MILDSPEC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace mildspec {

// Worker count: MILDSPEC_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t thread_count();

// Calls body(i) for i in [0, n). Each index is visited exactly once; callers
// must only write to outputs owned by their index so results do not depend
// on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mildspec

#endif  // MILDSPEC_PARALLEL_HPP_
