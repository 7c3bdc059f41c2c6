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

#include <doctest.h>

#include <vector>

using namespace itp;
using namespace itp::gf;
using namespace itp::subspace;

TEST_SUITE_BEGIN("subspace");

TEST_CASE("enumeration matches the encoding prefix") {
  FieldParams ctx = FieldParams::make(2, 4);

  std::vector<u128> encs;
  enumerate_Vm(ctx, 2, [&](const FFElem&, u128 e) { encs.push_back(e); });
  CHECK(encs == std::vector<u128>{0, 1, 2, 3});

  encs.clear();
  enumerate_Vm(ctx, 4, [&](const FFElem&, u128 e) { encs.push_back(e); });
  CHECK(encs.size() == 16);  // V_n is the whole field
  CHECK(encs.front() == 0);
  CHECK(encs.back() == 15);

  FieldParams f27 = FieldParams::make(3, 3);
  encs.clear();
  enumerate_Vm(f27, 1, [&](const FFElem& x, u128 e) {
    encs.push_back(e);
    // V_1 = F_q embedded via the constant coordinate.
    for (size_t i = 1; i < x.c.size(); ++i) CHECK(x.c[i] == 0);
  });
  CHECK(encs == std::vector<u128>{0, 1, 2});
}

TEST_CASE("bounds and guards") {
  FieldParams ctx = FieldParams::make(2, 8);
  CHECK_THROWS_AS(subspace_size(ctx, 0), config_error);
  CHECK_THROWS_AS(subspace_size(ctx, 9), config_error);
  CHECK(subspace_size(ctx, 8) == 256);
  CHECK_THROWS_AS(enumerate_Vm(ctx, 8, [](const FFElem&, u128) {}, 100), guard_error);
}

TEST_CASE("closure under addition and scaling, exhaustively") {
  for (auto [q, n, m] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 8, 3}, {3, 4, 2}, {5, 3, 2}}) {
    FieldParams ctx = FieldParams::make(q, n);
    std::vector<FFElem> elems;
    std::vector<bool> member(static_cast<size_t>(ctx.field_size()), false);
    enumerate_Vm(ctx, m, [&](const FFElem& x, u128 e) {
      elems.push_back(x);
      member[static_cast<size_t>(e)] = true;
    });
    const u128 qm = subspace_size(ctx, m);
    CHECK(elems.size() == static_cast<size_t>(qm));

    for (const FFElem& a : elems) {
      for (const FFElem& b : elems) {
        u128 sum = ff_encode(ctx, ff_add(ctx, a, b));
        CHECK(member[static_cast<size_t>(sum)]);
      }
      for (uint32_t c = 0; c < q; ++c) {
        FFElem scalar = ff_zero(ctx);
        scalar.c[0] = c;
        u128 scaled = ff_encode(ctx, ff_mul(ctx, a, scalar));
        CHECK(member[static_cast<size_t>(scaled)]);
      }
    }
  }
}

TEST_SUITE_END();
