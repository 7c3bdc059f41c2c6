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

#include "itp/tester.hpp"

#include <doctest.h>

#include <cmath>

#include "itp/errors.hpp"
#include "itp/rng.hpp"
#include "itp/subspace.hpp"

using namespace itp;
using namespace itp::gf;
using namespace itp::tester;
using itp::oracle::PowerOracle;
using itp::polyrat::Poly;

namespace {

Poly poly(const FieldParams& ctx, std::initializer_list<u128> encs) {
  return polyrat::poly_from_encodings(ctx, std::vector<u128>(encs));
}

}  // namespace

TEST_SUITE_BEGIN("tester");

TEST_CASE("choose_params") {
  // 255 = 3 * 5 * 17; with nu forced to 1, m = floor(2 log2 17) = 8.
  FieldParams ctx = FieldParams::make(2, 8);
  TestParams p = choose_params(ctx, 17, 1, 0.5, /*nu_override=*/1);
  CHECK(p.nu == 1);
  CHECK(p.m == 8);
  CHECK(p.delta == doctest::Approx(std::log2(17.0) / 8.0));

  SUBCASE("determinism") {
    TestParams a = choose_params(ctx, 17, 1, 0.5);
    TestParams b = choose_params(ctx, 17, 1, 0.5);
    CHECK(a.nu == b.nu);
    CHECK(a.m == b.m);
    CHECK(a.delta == b.delta);
  }

  SUBCASE("clamping keeps 1 <= m <= n and nu >= 1") {
    for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 12}, {3, 5}}) {
      FieldParams f = FieldParams::make(q, n);
      u128 order = f.group_order();
      for (u128 e = 2; e <= order; ++e) {
        if (order % e != 0) continue;
        for (uint32_t d : {1u, 2u, 3u}) {
          for (double c : {0.1, 0.5, 1.0}) {
            TestParams tp = choose_params(f, e, d, c);
            CHECK(tp.nu >= 1);
            CHECK(tp.m >= 1);
            CHECK(tp.m <= f.n());
          }
        }
      }
    }
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(choose_params(ctx, 1, 1, 0.5), config_error);
    CHECK_THROWS_AS(choose_params(ctx, 7, 1, 0.5), config_error);   // 7 does not divide 255
    CHECK_THROWS_AS(choose_params(ctx, 17, 0, 0.5), config_error);
    CHECK_THROWS_AS(choose_params(ctx, 17, 1, 0.0), config_error);
    CHECK_THROWS_AS(choose_params(ctx, 17, 1, 1.5), config_error);
    CHECK_THROWS_AS(choose_params(ctx, 17, 1, 0.5, std::nullopt, 9u), config_error);
  }
}

TEST_CASE("subspace_test") {
  FieldParams ctx = FieldParams::make(2, 8);

  SUBCASE("f = g scans all of V_m") {
    Poly f = poly(ctx, {3, 1});
    PowerOracle of(ctx, f, 17), og(ctx, f, 17);
    TestParams p = choose_params(ctx, 17, 1, 0.5, 1u, 3u);
    TestReport r = subspace_test(as_oracle_fn(of), as_oracle_fn(og), ctx, p);
    CHECK(r.verdict == TestReport::Verdict::kEqualOrIndistinguishable);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.queries_f == 8);  // q^m = 2^3
    CHECK(r.queries_g == 8);
    CHECK(of.queries() == 8);
    CHECK(og.queries() == 8);
  }

  SUBCASE("witness at the origin") {
    // f(0)^17 = 0, g(0)^17 = 1.
    PowerOracle of(ctx, poly(ctx, {0, 1}), 17), og(ctx, poly(ctx, {1, 1}), 17);
    TestParams p = choose_params(ctx, 17, 1, 0.5, 1u, 2u);
    TestReport r = subspace_test(as_oracle_fn(of), as_oracle_fn(og), ctx, p);
    CHECK(r.verdict == TestReport::Verdict::kDistinct);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == 0);
    CHECK(r.queries_f == 1);  // early exit on the first point
    CHECK(of.queries() == 1);
    // soundness: the witness reproduces the mismatch
    CHECK(of.query_enc(*r.witness) != og.query_enc(*r.witness));
  }
}

TEST_CASE("naive_test") {
  FieldParams ctx = FieldParams::make(2, 4);

  SUBCASE("f = g consumes the full ed+1 budget") {
    Poly f = poly(ctx, {5, 1});
    PowerOracle of(ctx, f, 3), og(ctx, f, 3);
    TestReport r = naive_test(as_oracle_fn(of), as_oracle_fn(og), ctx, 3, 1);
    CHECK(r.verdict == TestReport::Verdict::kEqualOrIndistinguishable);
    CHECK(r.queries_f == 4);  // ed + 1
    CHECK(of.queries() == 4);
  }

  SUBCASE("distinct at encoding 0") {
    PowerOracle of(ctx, poly(ctx, {0, 1}), 3), og(ctx, poly(ctx, {1, 1}), 3);
    TestReport r = naive_test(as_oracle_fn(of), as_oracle_fn(og), ctx, 3, 1);
    CHECK(r.verdict == TestReport::Verdict::kDistinct);
    CHECK(r.witness == u128{0});
    CHECK(r.queries_f <= 4);
  }

  SUBCASE("field too small") {
    PowerOracle of(ctx, poly(ctx, {0, 1}), 15), og(ctx, poly(ctx, {1, 1}), 15);
    CHECK_THROWS_AS(naive_test(as_oracle_fn(of), as_oracle_fn(og), ctx, 15, 2), config_error);
  }
}

TEST_CASE("witness_profile") {
  FieldParams ctx = FieldParams::make(2, 8);
  Poly x = poly(ctx, {0, 1});
  Poly x1 = poly(ctx, {1, 1});

  CHECK_FALSE(witness_profile(ctx, x, x, 17).has_value());
  CHECK(witness_profile(ctx, x, x1, 17) == 1u);  // x = 0 separates already in V_1

  SUBCASE("minimality: V_{m-1} holds no witness") {
    Rng rng(8080);
    for (int i = 0; i < 30; ++i) {
      uint32_t d = 1 + static_cast<uint32_t>(rng.below(2));
      Poly f = polyrat::random_monic(ctx, d, rng);
      Poly g = polyrat::random_monic(ctx, d, rng);
      u128 e = 17;
      auto m = witness_profile(ctx, f, g, e);
      if (!m.has_value()) continue;
      if (*m == 1) continue;
      const std::vector<u128> fe = polyrat::poly_encodings(ctx, f);
      const std::vector<u128> ge = polyrat::poly_encodings(ctx, g);
      bool found = false;
      subspace::enumerate_Vm(ctx, *m - 1, [&](const FFElem&, u128 xe) {
        if (ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, fe, xe), e) !=
            ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, ge, xe), e))
          found = true;
      });
      CHECK_FALSE(found);
    }
  }
}

TEST_CASE("guaranteed regime matches ground truth") {
  FieldParams ctx = FieldParams::make(2, 12);
  Rng rng(424242);
  std::vector<u128> divisors;
  for (u128 e = 2; e < 4095; ++e) {
    if (4095 % e == 0) divisors.push_back(e);
  }
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    uint32_t d = 1 + static_cast<uint32_t>(rng.below(2));
    u128 e = divisors[rng.below(divisors.size())];
    if ((4095 / e) <= d) continue;  // outside the exactness regime
    Poly f = polyrat::random_monic(ctx, d, rng);
    Poly g = rng.below(3) == 0 ? f : polyrat::random_monic(ctx, d, rng);

    // Smallest m with q^m > ed.
    uint32_t m = 1;
    while (subspace::subspace_size(ctx, m) <= e * d) ++m;

    PowerOracle of(ctx, f, e), og(ctx, g, e);
    TestParams p;
    p.e = e;
    p.d = d;
    p.m = m;
    TestReport r = subspace_test(as_oracle_fn(of), as_oracle_fn(og), ctx, p);
    CHECK(r.guaranteed);
    CHECK((r.verdict == TestReport::Verdict::kDistinct) == (f != g));

    TestReport nr = naive_test(as_oracle_fn(of), as_oracle_fn(og), ctx, e, d);
    CHECK((nr.verdict == TestReport::Verdict::kDistinct) == (f != g));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_SUITE_END();
