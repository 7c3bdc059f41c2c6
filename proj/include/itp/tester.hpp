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
#include <functional>
#include <optional>

#include "itp/gf.hpp"
#include "itp/oracle.hpp"
#include "itp/polyrat.hpp"

namespace itp::tester {

using gf::FieldParams;
using polyrat::Poly;

// The tester sees the oracles only through this query interface plus the
// public parameters e and d; it never touches the hidden polynomials.
using OracleFn = std::function<u128(u128)>;

inline OracleFn as_oracle_fn(const oracle::PowerOracle& o) {
  return [&o](u128 x) { return o.query_enc(x); };
}

struct TestParams {
  uint32_t d = 1;
  u128 e = 2;
  double c = 0.5;       // tuning constant standing in for the paper-level
                        // absolute constant; recorded with every report
  double delta = 0.0;   // log e / (n log q)
  uint32_t nu = 1;
  uint32_t m = 1;
  bool nu_overridden = false;
  bool m_overridden = false;
  bool m_clamped = false;           // the floor formula left [1, n]
  bool near_integer_boundary = false;  // a floor argument was within 2^-40
                                       // of an integer
};

// Parameter selection for the subspace test:
//   nu = floor(c^{1+1/(2d)} / (2 delta)^{1/(2d)}),  nu >= 1
//   m  = floor(2 log e / (nu log q)), clamped to [1, n]
// Evaluated in long double (64-bit mantissa).
TestParams choose_params(const FieldParams& ctx, u128 e, uint32_t d, double c = 0.5,
                         std::optional<uint32_t> nu_override = std::nullopt,
                         std::optional<uint32_t> m_override = std::nullopt);

struct TestReport {
  enum class Verdict { kEqualOrIndistinguishable, kDistinct };
  Verdict verdict = Verdict::kEqualOrIndistinguishable;
  std::optional<u128> witness;  // encoding; present iff verdict is distinct
  uint64_t queries_f = 0;
  uint64_t queries_g = 0;
  uint32_t m = 0;   // 0 when not applicable (naive test)
  uint32_t nu = 0;  // 0 when no parameter derivation was involved
  bool guaranteed = false;  // q^m > e*d: a mismatch must exist when f^e != g^e
};

// Queries both oracles on every x in V_m in encoding order; early exit on
// the first mismatch (the witness is the smallest-encoding mismatch).
TestReport subspace_test(const OracleFn& oracle_f, const OracleFn& oracle_g,
                         const FieldParams& ctx, const TestParams& params,
                         u128 guard = gf::kDefaultEnumGuard);

// The ed+1-query baseline: queries encodings 0..ed; any nonzero difference
// polynomial f^e - g^e has at most ed roots, so agreement everywhere on
// ed+1 distinct points certifies f^e = g^e as polynomials.
TestReport naive_test(const OracleFn& oracle_f, const OracleFn& oracle_g,
                      const FieldParams& ctx, u128 e, uint32_t d,
                      u128 guard = gf::kDefaultEnumGuard);

// Smallest m such that V_m contains a witness f(x)^e != g(x)^e, or nullopt
// when the oracles are indistinguishable on the whole field.
std::optional<uint32_t> witness_profile(const FieldParams& ctx, const Poly& f, const Poly& g,
                                        u128 e, u128 guard = oracle::kDefaultScanGuard);

}  // namespace itp::tester
