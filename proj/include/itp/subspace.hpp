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

#pragma once

#include <cstdint>

#include "itp/errors.hpp"
#include "itp/gf.hpp"

namespace itp::subspace {

using gf::FFElem;
using gf::FieldParams;

// The F_q-span of 1, alpha, ..., alpha^{m-1} inside F_{q^n}. As a set of
// encodings this is exactly [0, q^m), so V_m depends on the chosen psi.
struct SubspaceSpec {
  uint32_t m;
};

u128 subspace_size(const FieldParams& ctx, uint32_t m);  // q^m, validates m

// Calls fn(x, enc(x)) for the q^m elements supported on alpha^0..alpha^{m-1},
// in increasing encoding order.
template <class Fn>
void enumerate_Vm(const FieldParams& ctx, uint32_t m, Fn&& fn,
                  u128 guard = gf::kDefaultEnumGuard) {
  u128 count = subspace_size(ctx, m);
  gf::detail::check_enum_guard(count, guard);
  FFElem x = gf::ff_zero(ctx);
  u128 e = 0;
  for (;;) {
    fn(static_cast<const FFElem&>(x), e);
    if (!gf::detail::odometer_step(x.c, ctx.q(), m)) break;
    ++e;
  }
}

}  // namespace itp::subspace
