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
#include <optional>
#include <vector>

#include "itp/gf.hpp"
#include "itp/rng.hpp"

namespace itp::polyrat {

using gf::FFElem;
using gf::FieldParams;

// Univariate polynomial over F_{q^n}: constant term first, no trailing
// zeros, zero polynomial = empty vector.
struct Poly {
  std::vector<FFElem> c;
  bool operator==(const Poly&) const = default;
};

inline int deg(const Poly& p) { return static_cast<int>(p.c.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.c.empty(); }
bool is_monic(const Poly& p);

Poly trim(Poly p);
Poly poly_from_encodings(const FieldParams& ctx, const std::vector<u128>& encs);
std::vector<u128> poly_encodings(const FieldParams& ctx, const Poly& p);

Poly add(const FieldParams& ctx, const Poly& a, const Poly& b);
Poly sub(const FieldParams& ctx, const Poly& a, const Poly& b);
Poly mul(const FieldParams& ctx, const Poly& a, const Poly& b);
Poly scale(const FieldParams& ctx, const Poly& a, const FFElem& s);
std::pair<Poly, Poly> divmod(const FieldParams& ctx, const Poly& a, const Poly& b);
Poly make_monic(const FieldParams& ctx, const Poly& a);

FFElem eval_poly(const FieldParams& ctx, const Poly& p, const FFElem& x);

// Monic gcd via Euclid; throws if both arguments are zero.
Poly gcd_poly(const FieldParams& ctx, const Poly& a, const Poly& b);

// Reduced rational function: gcd(num, den) = 1 and den monic.
struct RatFn {
  Poly num;
  Poly den;
  bool operator==(const RatFn&) const = default;
};

// Cancels gcd(f, g) and scales the denominator monic; g must be nonzero.
RatFn normalize_rat(const FieldParams& ctx, const Poly& f, const Poly& g);

// nullopt marks a pole (reduced denominator vanishes at x). Poles are
// values, not errors: subspace sweeps must not abort on them.
std::optional<FFElem> eval_rat(const FieldParams& ctx, const RatFn& r, const FFElem& x);

// Monic polynomial of degree d with lower coefficients drawn from the
// seeded generator. Same seed, same polynomial.
Poly random_monic(const FieldParams& ctx, uint32_t d, uint64_t seed);
Poly random_monic(const FieldParams& ctx, uint32_t d, Rng& rng);

// Encoding-level Horner evaluation; uses the field's log table when
// available so large sweeps avoid per-point vector arithmetic.
u128 eval_poly_enc(const FieldParams& ctx, const std::vector<u128>& coeff_encs, u128 x);

}  // namespace itp::polyrat
