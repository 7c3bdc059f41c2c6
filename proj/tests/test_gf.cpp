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

#include "itp/gf.hpp"

#include <doctest.h>

#include "itp/errors.hpp"
#include "itp/rng.hpp"

using namespace itp;
using namespace itp::gf;

namespace {

// Independent irreducibility oracle: trial division by every monic
// polynomial of degree 1..deg/2. Only usable for tiny q^n, which is the
// point: it shares nothing with the Rabin-style test in the library.
bool irreducible_by_trial_division(const QPoly& f, uint32_t q) {
  int n = qp_deg(f);
  if (n < 1) return false;
  for (int k = 1; 2 * k <= n; ++k) {
    u128 qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    for (u128 v = 0; v < qk; ++v) {
      QPoly cand = qp_decode(v, q);
      cand.resize(k, 0);
      cand.push_back(1);
      if (qp_is_zero(qp_mod(f, cand, q))) return false;
    }
  }
  return true;
}

u128 pow_u128(uint32_t q, uint32_t n) {
  u128 v = 1;
  while (n--) v *= q;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("gf");

TEST_CASE("qpoly divmod and gcd basics") {
  const uint32_t q = 3;
  QPoly a{2, 0, 1};  // T^2 + 2
  QPoly b{1, 1};     // T + 1
  auto [quo, rem] = qp_divmod(a, b, q);
  CHECK(qp_add(qp_mul(quo, b, q), rem, q) == a);
  CHECK(qp_deg(rem) < qp_deg(b));

  // gcd(T^2+2T, T) = T over F_3
  CHECK(qp_gcd(QPoly{0, 2, 1}, QPoly{0, 1}, q) == QPoly{0, 1});
  CHECK_THROWS_AS(qp_gcd({}, {}, q), config_error);
}

TEST_CASE("find_irreducible canonical moduli") {
  // All monic linear polynomials are irreducible; the smallest encoding is T.
  CHECK(find_irreducible(2, 1) == QPoly{0, 1});
  CHECK(qp_encode(find_irreducible(2, 1), 2) == 2);

  // Exhaustive scan over encodings 16..31 with the trial-division oracle.
  {
    u128 expected_enc = 0;
    for (u128 v = 16; v < 32; ++v) {
      if (irreducible_by_trial_division(qp_decode(v, 2), 2)) {
        expected_enc = v;
        break;
      }
    }
    CHECK(expected_enc == 19);  // T^4 + T + 1
    CHECK(qp_encode(find_irreducible(2, 4), 2) == expected_enc);
  }

  // T^2 (encoding 9) is reducible; T^2 + 1 has no root in F_3.
  {
    u128 expected_enc = 0;
    for (u128 v = 9; v < 18; ++v) {
      if (irreducible_by_trial_division(qp_decode(v, 3), 3)) {
        expected_enc = v;
        break;
      }
    }
    CHECK(expected_enc == 10);
    CHECK(qp_encode(find_irreducible(3, 2), 3) == expected_enc);
  }

  SUBCASE("determinism") {
    CHECK(find_irreducible(5, 3) == find_irreducible(5, 3));
  }

  SUBCASE("rabin test agrees with trial division on all quintics over F_2") {
    for (u128 v = 32; v < 64; ++v) {
      QPoly f = qp_decode(v, 2);
      CHECK(qp_is_irreducible(f, 2) == irreducible_by_trial_division(f, 2));
    }
  }
}

TEST_CASE("field params validation") {
  CHECK_THROWS_AS(FieldParams::make(4, 2), config_error);   // q not prime
  CHECK_THROWS_AS(FieldParams::make(2, 0), config_error);   // n < 1
  CHECK_THROWS_AS(FieldParams::make(2, 121), config_error); // over the order budget
  CHECK_THROWS_AS(FieldParams::make(2, 4, QPoly{1, 0, 0, 0, 1}), config_error);  // reducible
  CHECK_THROWS_AS(FieldParams::make(2, 4, QPoly{1, 1, 0, 1}), config_error);     // wrong degree

  FieldParams ctx = FieldParams::make(2, 4);
  CHECK(ctx.psi_encoding() == 19);
  CHECK(ctx.group_order() == 15);
  CHECK(ctx.field_size() == 16);
}

TEST_CASE("arithmetic in F_16 with psi = T^4+T+1") {
  FieldParams ctx = FieldParams::make(2, 4);

  // alpha * alpha^3 = alpha^4 = alpha + 1
  CHECK(ff_encode(ctx, ff_mul(ctx, ff_decode(ctx, 2), ff_decode(ctx, 8))) == 3);
  // alpha * (alpha^3 + 1) = 1
  CHECK(ff_encode(ctx, ff_inv(ctx, ff_decode(ctx, 2))) == 9);
  CHECK(ff_encode(ctx, ff_pow(ctx, ff_decode(ctx, 2), 15)) == 1);
  CHECK_THROWS_AS(ff_inv(ctx, ff_zero(ctx)), config_error);

  SUBCASE("encoding round-trip") {
    for (u128 v = 0; v < 16; ++v) CHECK(ff_encode(ctx, ff_decode(ctx, v)) == v);
    CHECK_THROWS_AS(ff_decode(ctx, 16), config_error);
  }
}

TEST_CASE("field axioms on random triples") {
  for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 8}, {3, 3}, {5, 2}, {2, 16}}) {
    FieldParams ctx = FieldParams::make(q, n);
    Rng rng(0xabcdefULL + q * 100 + n);
    const u128 size = ctx.field_size();
    for (int i = 0; i < 200; ++i) {
      FFElem a = ff_decode(ctx, rng.below(static_cast<uint64_t>(size)));
      FFElem b = ff_decode(ctx, rng.below(static_cast<uint64_t>(size)));
      FFElem c = ff_decode(ctx, rng.below(static_cast<uint64_t>(size)));
      CHECK(ff_add(ctx, a, b) == ff_add(ctx, b, a));
      CHECK(ff_mul(ctx, a, b) == ff_mul(ctx, b, a));
      CHECK(ff_add(ctx, ff_add(ctx, a, b), c) == ff_add(ctx, a, ff_add(ctx, b, c)));
      CHECK(ff_mul(ctx, ff_mul(ctx, a, b), c) == ff_mul(ctx, a, ff_mul(ctx, b, c)));
      CHECK(ff_mul(ctx, a, ff_add(ctx, b, c)) ==
            ff_add(ctx, ff_mul(ctx, a, b), ff_mul(ctx, a, c)));
      CHECK(ff_mul(ctx, a, ff_one(ctx)) == a);
      CHECK(ff_add(ctx, a, ff_zero(ctx)) == a);
      CHECK(ff_add(ctx, a, ff_neg(ctx, a)) == ff_zero(ctx));
      if (!ff_is_zero(a)) {
        CHECK(ff_mul(ctx, a, ff_inv(ctx, a)) == ff_one(ctx));
        CHECK(ff_mul_enc(ctx, ff_encode(ctx, a), ff_inv_enc(ctx, ff_encode(ctx, a))) == 1);
      }
    }
  }
}

TEST_CASE("frobenius fixes every element exhaustively") {
  for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 10}, {3, 5}}) {
    FieldParams ctx = FieldParams::make(q, n);
    const u128 qn = pow_u128(q, n);
    enumerate_field(ctx, [&](const FFElem& x, u128) {
      CHECK(ff_pow(ctx, x, qn) == x);
    });
  }
}

TEST_CASE("enumerate_field yields encodings in order") {
  FieldParams ctx = FieldParams::make(2, 4);
  u128 expected = 0;
  enumerate_field(ctx, [&](const FFElem& x, u128 e) {
    CHECK(e == expected);
    CHECK(ff_encode(ctx, x) == expected);
    ++expected;
  });
  CHECK(expected == 16);

  FieldParams big = FieldParams::make(2, 30);
  CHECK_THROWS_AS(enumerate_field(big, [](const FFElem&, u128) {}), guard_error);
}

TEST_CASE("log table agrees with generic arithmetic") {
  for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 8}, {3, 4}, {7, 3}}) {
    FieldParams ctx = FieldParams::make(q, n);
    const LogTable* lt = ctx.log_table();
    REQUIRE(lt != nullptr);
    Rng rng(17 * q + n);
    const uint64_t size = static_cast<uint64_t>(ctx.field_size());
    for (int i = 0; i < 300; ++i) {
      u128 a = rng.below(size);
      u128 b = rng.below(size);
      CHECK(ff_mul_enc(ctx, a, b) ==
            ff_encode(ctx, ff_mul(ctx, ff_decode(ctx, a), ff_decode(ctx, b))));
      u128 e = rng.below(1 << 20);
      CHECK(ff_pow_enc(ctx, a, e) == ff_encode(ctx, ff_pow(ctx, ff_decode(ctx, a), e)));
      if (a != 0) CHECK(ff_mul_enc(ctx, a, ff_inv_enc(ctx, a)) == 1);
    }
    // The generator really has full order.
    u128 g = lt->generator_encoding();
    CHECK(ff_pow_enc(ctx, g, ctx.group_order()) == 1);
  }
  // No table above the size cap.
  FieldParams big = FieldParams::make(2, 24);
  CHECK(big.log_table() == nullptr);
}

TEST_SUITE_END();
