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
#include <map>
#include <vector>

#include "itp/gf.hpp"

// Divisor arithmetic for the rational function field F_q(T): places are the
// monic irreducible polynomials plus the degree-1 place at infinity.
namespace itp::ffdiv {

using gf::QPoly;

struct Place {
  bool infinite = false;
  QPoly poly;  // monic irreducible; empty when infinite

  int degree() const { return infinite ? 1 : gf::qp_deg(poly); }

  friend bool operator==(const Place& a, const Place& b) = default;
  // Infinity first, then by (degree, coefficients); gives divisors a
  // deterministic support order.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return a.infinite;
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    for (size_t i = a.poly.size(); i-- > 0;) {
      if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
    }
    return false;
  }
};

Place place_infinity();
Place place_finite(QPoly monic_irreducible, uint32_t q);  // validated

// Finite formal sum of places with nonzero integer multiplicities.
class FFDivisor {
 public:
  FFDivisor() = default;

  void add(const Place& p, int64_t mult);  // erases entries that reach 0
  int64_t mult_of(const Place& p) const;

  int64_t degree() const;        // sum n_P * deg P
  int64_t height() const;        // max |n_P|
  bool is_effective() const;     // all multiplicities >= 0
  bool is_zero() const { return support_.empty(); }

  const std::map<Place, int64_t>& support() const { return support_; }

  friend bool operator==(const FFDivisor&, const FFDivisor&) = default;

 private:
  std::map<Place, int64_t> support_;
};

FFDivisor divisor_add(const FFDivisor& a, const FFDivisor& b);
FFDivisor divisor_neg(const FFDivisor& a);

struct DivisorParts {
  FFDivisor positive;   // D_0
  FFDivisor negative;   // D_inf (stored with positive multiplicities)
  FFDivisor minimum;    // min{D, E} componentwise
};

// D = D_0 - D_inf and the componentwise minimum of the two arguments.
DivisorParts parts_and_min(const FFDivisor& d, const FFDivisor& e);

// Rational function over F_q in lowest terms: coprime, den monic. The
// height is max(deg num, deg den).
struct RatFnQ {
  QPoly num;
  QPoly den;
  bool operator==(const RatFnQ&) const = default;
  bool operator<(const RatFnQ& o) const;
  int height() const { return std::max(gf::qp_deg(num), gf::qp_deg(den)); }
};

RatFnQ make_ratfnq(uint32_t q, QPoly num, QPoly den);  // reduces; den != 0
RatFnQ ratfnq_mul(uint32_t q, const RatFnQ& a, const RatFnQ& b);

// (f) = sum ord_P(f) P; zeros from the numerator factorization, poles from
// the denominator, ord at infinity = deg den - deg num. f != 0.
FFDivisor principal_divisor(uint32_t q, const RatFnQ& f);

// Monic irreducibles of degree exactly k, in increasing encoding order.
std::vector<QPoly> monic_irreducibles(uint32_t q, uint32_t k);

// Count of monic irreducibles of degree k: (1/k) sum_{j | k} mu(j) q^{k/j}.
uint64_t count_monic_irreducibles(uint32_t q, uint32_t k);

// tau(D) = number of effective E <= D = prod (n_P + 1); D must be effective.
uint64_t tau(const FFDivisor& d);

struct EffectiveDivisorCounts {
  std::vector<uint64_t> by_degree;   // index s: count of degree exactly s
  std::vector<uint64_t> cumulative;  // degree <= s
  std::vector<u128> bound;           // q^{2s}
};

// Dynamic program over places grouped by degree (necklace counts plus the
// infinite place); r <= 12.
EffectiveDivisorCounts count_effective_divisors(uint32_t q, uint32_t r);

struct PoleBoundReport {
  int height = 0;
  int64_t deg_pole_part = 0;
  bool bound_ok = false;  // deg (f)_inf <= 2h; for F_q(T) equality deg = h holds
};

PoleBoundReport height_and_pole_bound(uint32_t q, const RatFnQ& f);

struct RatFnProductSet {
  std::vector<RatFnQ> set;  // sorted canonical representatives
  int max_height = 0;
  double ratio = 0.0;  // #A^(nu) / (#A)^nu
};

RatFnProductSet product_set_ratfns(uint32_t q, const std::vector<RatFnQ>& a, uint32_t nu,
                                   u128 work_guard = static_cast<u128>(1) << 26);

}  // namespace itp::ffdiv
