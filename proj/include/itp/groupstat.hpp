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
#include <span>
#include <vector>

#include "itp/gf.hpp"
#include "itp/polyrat.hpp"

namespace itp::groupstat {

using gf::FFElem;
using gf::FieldParams;
using polyrat::Poly;
using polyrat::RatFn;

// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<std::pair<u128, uint32_t>> factors;
  u128 value() const;
};

// Complete factorization: trial division to 10^6, then Brent's rho with
// deterministic parameters and Miller-Rabin certification of every prime.
// Throws check_error if a cofactor cannot be certified or split.
Factorization factor_u128(u128 v);
Factorization factor_group_order(const FieldParams& ctx);  // factors q^n - 1

// Exact multiplicative order of x != 0: start from q^n - 1 and strip each
// prime while the power still fixes 1.
u128 element_order(const FieldParams& ctx, const Factorization& fact, const FFElem& x);
u128 element_order_enc(const FieldParams& ctx, const Factorization& fact, u128 x);

// Exact value set of r on a point set: nonzero values deduplicated (sorted
// encodings), zeros of the numerator and poles tallied separately.
struct ValueSetSummary {
  std::vector<u128> values;  // sorted distinct encodings, all nonzero
  uint64_t zero_hits = 0;
  uint64_t poles = 0;
  uint64_t domain_size = 0;
  size_t size() const { return values.size(); }
};

ValueSetSummary value_set(const FieldParams& ctx, const RatFn& r, std::span<const u128> points);
ValueSetSummary value_set_Vm(const FieldParams& ctx, const RatFn& r, uint32_t m,
                             u128 guard = gf::kDefaultEnumGuard);

// A subgroup of the cyclic group F_{q^n}^* is determined by its order.
struct SubgroupDesc {
  u128 order;
};

// Order of the smallest subgroup containing A = lcm of element orders.
// Requires A nonempty with 0 not in A.
SubgroupDesc smallest_containing_subgroup(const FieldParams& ctx, const Factorization& fact,
                                          std::span<const u128> a);

struct ErsResult {
  SubgroupDesc subgroup;
  ValueSetSummary values;
};

// E_r(V_m) for r = f/g, computed on the nonzero part of the value set;
// zero_hits/poles in the summary tell the caller what was excluded.
// Throws check_error if every point is a zero or a pole.
ErsResult e_r_of_subspace(const FieldParams& ctx, const Poly& f, const Poly& g, uint32_t m,
                          u128 guard = gf::kDefaultEnumGuard);

inline constexpr u128 kDefaultWorkGuard = static_cast<u128>(1) << 26;

// Exact nu-fold product set, built incrementally as A^{(k)} * A. The guard
// bounds each step's pair count.
std::vector<u128> product_set(const FieldParams& ctx, std::span<const u128> a, uint32_t nu,
                              u128 work_guard = kDefaultWorkGuard);

struct GrowthReport {
  uint64_t size_a = 0;
  uint64_t size_a_nu = 0;
  double rho = 0.0;  // log(#A^(nu)) / (nu * m * log q)
  uint64_t zero_hits = 0;
  uint64_t poles = 0;
  u128 e_order = 0;          // order of the subgroup generated by A
  double preimage_floor = 0.0;  // (q^m - zero_hits - poles) / d
  bool floor_ok = false;        // size_a >= preimage_floor (root counting)
};

GrowthReport growth_report(const FieldParams& ctx, const Poly& f, const Poly& g, uint32_t m,
                           uint32_t nu, u128 enum_guard = gf::kDefaultEnumGuard,
                           u128 work_guard = kDefaultWorkGuard);

}  // namespace itp::groupstat
