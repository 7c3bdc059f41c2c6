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
#include <memory>
#include <vector>

#include "itp/u128.hpp"

namespace itp::gf {

// ---------------------------------------------------------------------------
// F_q[T] kernel
//
// Dense polynomials over the prime field F_q: coefficients in [0, q),
// constant term first, no trailing zeros (the zero polynomial is the empty
// vector). This kernel backs the extension modulus psi, irreducibility
// testing, and the F_q(T) divisor module.
// ---------------------------------------------------------------------------

using QPoly = std::vector<uint32_t>;

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool qp_is_zero(const QPoly& p) { return p.empty(); }

QPoly qp_trim(QPoly p);
QPoly qp_add(const QPoly& a, const QPoly& b, uint32_t q);
QPoly qp_sub(const QPoly& a, const QPoly& b, uint32_t q);
QPoly qp_mul(const QPoly& a, const QPoly& b, uint32_t q);
QPoly qp_scale(const QPoly& a, uint32_t c, uint32_t q);

// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b, uint32_t q);
QPoly qp_mod(const QPoly& a, const QPoly& b, uint32_t q);

// Monic gcd; not both zero.
QPoly qp_gcd(QPoly a, QPoly b, uint32_t q);
QPoly qp_make_monic(const QPoly& a, uint32_t q);

u128 qp_encode(const QPoly& p, uint32_t q);
QPoly qp_decode(u128 v, uint32_t q);

// Rabin test: T^{q^n} = T mod f and gcd(T^{q^{n/l}} - T, f) = 1 for every
// prime l | n. Requires f monic of degree >= 1.
bool qp_is_irreducible(const QPoly& f, uint32_t q);

uint32_t mod_inverse(uint32_t a, uint32_t q);  // a != 0 mod q, q prime
bool is_small_prime(uint32_t q);               // trial division, q <= 2^16

// ---------------------------------------------------------------------------
// The extension field F_{q^n} = F_q[T]/psi(T)
// ---------------------------------------------------------------------------

// Elements are coefficient vectors in the basis 1, alpha, ..., alpha^{n-1}
// where alpha is the residue class of T. Index i holds the coefficient of
// alpha^i. Length is exactly n.
struct FFElem {
  std::vector<uint32_t> c;
  bool operator==(const FFElem&) const = default;
};

class LogTable;

// Immutable description of F_{q^n}. Copies share the lazily built discrete
// log table, so a FieldParams can be passed around by value and across
// threads freely.
class FieldParams {
 public:
  // Canonical construction: psi is the monic irreducible of degree n over
  // F_q with the smallest integer encoding.
  static FieldParams make(uint32_t q, uint32_t n);
  // Explicit modulus override; psi is validated (monic, degree n, irreducible).
  static FieldParams make(uint32_t q, uint32_t n, QPoly psi);

  uint32_t q() const { return q_; }
  uint32_t n() const { return n_; }
  const QPoly& psi() const { return psi_; }
  u128 psi_encoding() const { return qp_encode(psi_, q_); }
  u128 group_order() const { return group_order_; }  // q^n - 1
  u128 field_size() const { return group_order_ + 1; }

  // Discrete log/antilog tables over a generator, built on first use when
  // q^n <= 2^20; nullptr for larger fields. Thread-safe.
  const LogTable* log_table() const;

 private:
  FieldParams(uint32_t q, uint32_t n, QPoly psi, u128 group_order);

  uint32_t q_;
  uint32_t n_;
  QPoly psi_;
  u128 group_order_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Smallest monic irreducible of degree n over F_q by integer encoding.
// Deterministic; requires q prime, n >= 1, q^n <= 2^120.
QPoly find_irreducible(uint32_t q, uint32_t n);

// --- element construction and encoding ---

FFElem ff_zero(const FieldParams& ctx);
FFElem ff_one(const FieldParams& ctx);
FFElem ff_alpha(const FieldParams& ctx);  // residue class of T (n >= 2), else 1
FFElem ff_from_coeffs(const FieldParams& ctx, std::vector<uint32_t> coeffs);

// enc(x) = sum coeffs[i] * q^i, a bijection onto [0, q^n).
u128 ff_encode(const FieldParams& ctx, const FFElem& x);
FFElem ff_decode(const FieldParams& ctx, u128 v);

inline bool ff_is_zero(const FFElem& x) {
  for (uint32_t ci : x.c)
    if (ci != 0) return false;
  return true;
}

// --- arithmetic ---

FFElem ff_add(const FieldParams& ctx, const FFElem& a, const FFElem& b);
FFElem ff_sub(const FieldParams& ctx, const FFElem& a, const FFElem& b);
FFElem ff_neg(const FieldParams& ctx, const FFElem& a);
FFElem ff_mul(const FieldParams& ctx, const FFElem& a, const FFElem& b);
FFElem ff_inv(const FieldParams& ctx, const FFElem& a);  // throws on zero
FFElem ff_pow(const FieldParams& ctx, const FFElem& a, u128 e);

// Encoding-level arithmetic used by sweeps; falls back to decode/encode when
// no fast path applies.
u128 ff_add_enc(const FieldParams& ctx, u128 a, u128 b);
u128 ff_mul_enc(const FieldParams& ctx, u128 a, u128 b);
u128 ff_inv_enc(const FieldParams& ctx, u128 a);
u128 ff_pow_enc(const FieldParams& ctx, u128 a, u128 e);

// --- enumeration ---

inline constexpr u128 kDefaultEnumGuard = static_cast<u128>(1) << 24;

// Calls fn(x, enc(x)) for every field element in increasing encoding order.
// Throws guard_error if q^n exceeds the guard.
template <class Fn>
void enumerate_field(const FieldParams& ctx, Fn&& fn, u128 guard = kDefaultEnumGuard);

// ---------------------------------------------------------------------------
// Discrete log tables
//
// For fields with q^n <= 2^20 all encodings fit in 32 bits and a full
// log/antilog table pair makes multiplication, inversion and exponentiation
// O(1). Sweep-style experiments (value sets, product sets, oracle scans)
// lean on this.
// ---------------------------------------------------------------------------

class LogTable {
 public:
  static constexpr u128 kMaxFieldSize = static_cast<u128>(1) << 20;

  // Builds tables for ctx; requires q^n <= kMaxFieldSize.
  static std::unique_ptr<LogTable> build(const FieldParams& ctx);

  uint32_t generator_encoding() const { return generator_; }
  uint64_t order() const { return order_; }  // q^n - 1

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  uint32_t inv(uint32_t a) const {  // a != 0
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : order_ - l];
  }

  uint32_t pow(uint32_t a, u128 e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    uint64_t le = static_cast<uint64_t>(e % order_);
    return exp_[static_cast<uint64_t>(log_[a]) * le % order_];
  }

  uint32_t log(uint32_t a) const { return log_[a]; }  // a != 0
  uint32_t exp(uint64_t k) const { return exp_[k % order_]; }

 private:
  LogTable() = default;
  uint32_t generator_ = 0;
  uint64_t order_ = 0;
  std::vector<uint32_t> log_;  // encoding -> exponent, index 0 unused
  std::vector<uint32_t> exp_;  // exponent -> encoding, doubled to skip a mod
};

// --- template implementation ---

namespace detail {
// Little-endian base-q odometer over the coefficient vector; returns false
// on wrap-around (all digits were q-1).
inline bool odometer_step(std::vector<uint32_t>& digits, uint32_t q, size_t limit) {
  for (size_t i = 0; i < limit; ++i) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}
void check_enum_guard(u128 count, u128 guard);
}  // namespace detail

template <class Fn>
void enumerate_field(const FieldParams& ctx, Fn&& fn, u128 guard) {
  detail::check_enum_guard(ctx.field_size(), guard);
  FFElem x = ff_zero(ctx);
  u128 e = 0;
  for (;;) {
    fn(static_cast<const FFElem&>(x), e);
    if (!detail::odometer_step(x.c, ctx.q(), x.c.size())) break;
    ++e;
  }
}

}  // namespace itp::gf
