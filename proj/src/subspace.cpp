// Copyright 2026 The itp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "itp/subspace.hpp"

namespace itp::subspace {

u128 subspace_size(const FieldParams& ctx, uint32_t m) {
  if (m < 1 || m > ctx.n()) throw config_error("subspace dimension m must satisfy 1 <= m <= n");
  u128 v = 1;
  for (uint32_t i = 0; i < m; ++i) v *= ctx.q();
  return v;
}

}  // namespace itp::subspace
