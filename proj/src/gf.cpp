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

#include <algorithm>
#include <cassert>
#include <mutex>
#include <string>

#include "itp/errors.hpp"

namespace itp::gf {

namespace {

std::string fmt_u128(u128 v) { return u128s::to_string(v); }

// q^n with a hard cap of 2^120 so group orders fit the 128-bit budget.
u128 checked_pow_qn(uint32_t q, uint32_t n) {
  constexpr u128 kCap = static_cast<u128>(1) << 120;
  u128 v = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (v > kCap / q) throw config_error("q^n exceeds the 2^120 order budget");
    v *= q;
  }
  if (v > kCap) throw config_error("q^n exceeds the 2^120 order budget");
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// F_q[T] kernel
// ---------------------------------------------------------------------------

QPoly qp_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qp_add(const QPoly& a, const QPoly& b, uint32_t q) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= q ? s - q : s;
  }
  return qp_trim(std::move(r));
}

QPoly qp_sub(const QPoly& a, const QPoly& b, uint32_t q) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t av = i < a.size() ? a[i] : 0;
    uint32_t bv = i < b.size() ? b[i] : 0;
    r[i] = av >= bv ? av - bv : av + q - bv;
  }
  return qp_trim(std::move(r));
}

QPoly qp_mul(const QPoly& a, const QPoly& b, uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % q;
    }
  }
  QPoly r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
  return qp_trim(std::move(r));
}

QPoly qp_scale(const QPoly& a, uint32_t c, uint32_t q) {
  c %= q;
  if (c == 0) return {};
  QPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) * c % q);
  return qp_trim(std::move(r));
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b, uint32_t q) {
  if (qp_is_zero(b)) throw config_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  QPoly rem = a;
  QPoly quo(a.size() - b.size() + 1, 0);
  const uint32_t lead_inv = mod_inverse(b.back(), q);
  for (size_t i = a.size() - 1;; --i) {
    if (rem[i] != 0) {
      uint32_t factor = static_cast<uint32_t>(static_cast<uint64_t>(rem[i]) * lead_inv % q);
      size_t shift = i - (b.size() - 1);
      quo[shift] = factor;
      for (size_t j = 0; j < b.size(); ++j) {
        uint32_t sub = static_cast<uint32_t>(static_cast<uint64_t>(factor) * b[j] % q);
        uint32_t cur = rem[shift + j];
        rem[shift + j] = cur >= sub ? cur - sub : cur + q - sub;
      }
    }
    if (i == b.size() - 1) break;
  }
  return {qp_trim(std::move(quo)), qp_trim(std::move(rem))};
}

QPoly qp_mod(const QPoly& a, const QPoly& b, uint32_t q) {
  return qp_divmod(a, b, q).second;
}

QPoly qp_make_monic(const QPoly& a, uint32_t q) {
  if (qp_is_zero(a)) return a;
  if (a.back() == 1) return a;
  return qp_scale(a, mod_inverse(a.back(), q), q);
}

QPoly qp_gcd(QPoly a, QPoly b, uint32_t q) {
  if (qp_is_zero(a) && qp_is_zero(b)) throw config_error("gcd(0, 0) is undefined");
  while (!qp_is_zero(b)) {
    QPoly r = qp_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return qp_make_monic(a, q);
}

u128 qp_encode(const QPoly& p, uint32_t q) {
  u128 v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * q + p[i];
  return v;
}

QPoly qp_decode(u128 v, uint32_t q) {
  QPoly p;
  while (v > 0) {
    p.push_back(static_cast<uint32_t>(v % q));
    v /= q;
  }
  return p;
}

uint32_t mod_inverse(uint32_t a, uint32_t q) {
  a %= q;
  if (a == 0) throw config_error("inverse of zero mod q");
  // Extended Euclid on (q, a).
  int64_t t = 0, new_t = 1;
  int64_t r = q, new_r = a;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q;
  return static_cast<uint32_t>(t);
}

bool is_small_prime(uint32_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (uint32_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

namespace {

QPoly qp_mulmod(const QPoly& a, const QPoly& b, const QPoly& m, uint32_t q) {
  return qp_mod(qp_mul(a, b, q), m, q);
}

QPoly qp_powmod(QPoly base, uint64_t e, const QPoly& m, uint32_t q) {
  QPoly result{1};
  base = qp_mod(base, m, q);
  while (e != 0) {
    if (e & 1) result = qp_mulmod(result, base, m, q);
    base = qp_mulmod(base, base, m, q);
    e >>= 1;
  }
  return result;
}

std::vector<uint32_t> prime_factors_of(uint32_t n) {
  std::vector<uint32_t> ps;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool qp_is_irreducible(const QPoly& f, uint32_t q) {
  int n = qp_deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const QPoly t{0, 1};

  // Frobenius ladder: frob[k] = T^{q^k} mod f.
  std::vector<QPoly> frob(static_cast<size_t>(n) + 1);
  frob[0] = t;
  for (int k = 1; k <= n; ++k) frob[k] = qp_powmod(frob[k - 1], q, f, q);

  if (frob[n] != qp_mod(t, f, q)) return false;
  for (uint32_t l : prime_factors_of(static_cast<uint32_t>(n))) {
    QPoly h = qp_sub(frob[n / l], t, q);
    if (qp_is_zero(h)) return false;
    if (qp_deg(qp_gcd(h, f, q)) != 0) return false;
  }
  return true;
}

QPoly find_irreducible(uint32_t q, uint32_t n) {
  if (!is_small_prime(q) || q > (1u << 16)) throw config_error("q must be a prime <= 2^16");
  if (n < 1) throw config_error("extension degree must be >= 1");
  u128 qn = checked_pow_qn(q, n);

  // Monic candidates share the leading q^n term, so scanning the lower part
  // in increasing value scans encodings in increasing order.
  for (u128 v = 0; v < qn; ++v) {
    QPoly cand = qp_decode(v, q);
    cand.resize(n, 0);
    cand.push_back(1);
    if (qp_is_irreducible(cand, q)) return cand;
  }
  throw check_error("no irreducible polynomial found (unreachable for prime q)");
}

// ---------------------------------------------------------------------------
// FieldParams
// ---------------------------------------------------------------------------

struct FieldParams::Cache {
  std::mutex mu;
  bool attempted = false;
  std::unique_ptr<LogTable> table;
};

FieldParams::FieldParams(uint32_t q, uint32_t n, QPoly psi, u128 group_order)
    : q_(q), n_(n), psi_(std::move(psi)), group_order_(group_order),
      cache_(std::make_shared<Cache>()) {}

FieldParams FieldParams::make(uint32_t q, uint32_t n) {
  return make(q, n, find_irreducible(q, n));
}

FieldParams FieldParams::make(uint32_t q, uint32_t n, QPoly psi) {
  if (!is_small_prime(q) || q > (1u << 16)) throw config_error("q must be a prime <= 2^16");
  if (n < 1) throw config_error("extension degree must be >= 1");
  u128 qn = checked_pow_qn(q, n);
  if (psi.size() != static_cast<size_t>(n) + 1)
    throw config_error("psi must have degree n (coefficient vector of length n+1)");
  for (uint32_t c : psi)
    if (c >= q) throw config_error("psi coefficient out of range [0, q)");
  if (psi.back() != 1) throw config_error("psi must be monic");
  if (!qp_is_irreducible(psi, q)) throw config_error("psi is not irreducible over F_q");
  return FieldParams(q, n, std::move(psi), qn - 1);
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

FFElem ff_zero(const FieldParams& ctx) { return FFElem{std::vector<uint32_t>(ctx.n(), 0)}; }

FFElem ff_one(const FieldParams& ctx) {
  FFElem x = ff_zero(ctx);
  x.c[0] = 1;
  return x;
}

FFElem ff_alpha(const FieldParams& ctx) {
  FFElem x = ff_zero(ctx);
  if (ctx.n() >= 2) {
    x.c[1] = 1;
  } else {
    // In F_q the residue class of T is psi's root -psi_0.
    x.c[0] = (ctx.q() - ctx.psi()[0]) % ctx.q();
  }
  return x;
}

FFElem ff_from_coeffs(const FieldParams& ctx, std::vector<uint32_t> coeffs) {
  if (coeffs.size() != ctx.n()) throw config_error("coefficient vector must have length n");
  for (uint32_t c : coeffs)
    if (c >= ctx.q()) throw config_error("element coefficient out of range [0, q)");
  return FFElem{std::move(coeffs)};
}

u128 ff_encode(const FieldParams& ctx, const FFElem& x) {
  if (ctx.q() == 2) {
    u128 v = 0;
    for (size_t i = x.c.size(); i-- > 0;) v = (v << 1) | x.c[i];
    return v;
  }
  u128 v = 0;
  for (size_t i = x.c.size(); i-- > 0;) v = v * ctx.q() + x.c[i];
  return v;
}

FFElem ff_decode(const FieldParams& ctx, u128 v) {
  if (v >= ctx.field_size()) throw config_error("encoding out of range [0, q^n)");
  FFElem x = ff_zero(ctx);
  if (ctx.q() == 2) {
    for (size_t i = 0; v != 0; ++i, v >>= 1) x.c[i] = static_cast<uint32_t>(v & 1);
    return x;
  }
  for (size_t i = 0; v != 0; ++i, v /= ctx.q()) x.c[i] = static_cast<uint32_t>(v % ctx.q());
  return x;
}

FFElem ff_add(const FieldParams& ctx, const FFElem& a, const FFElem& b) {
  const uint32_t q = ctx.q();
  FFElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint32_t s = r.c[i] + b.c[i];
    r.c[i] = s >= q ? s - q : s;
  }
  return r;
}

FFElem ff_sub(const FieldParams& ctx, const FFElem& a, const FFElem& b) {
  const uint32_t q = ctx.q();
  FFElem r = a;
  for (size_t i = 0; i < r.c.size(); ++i) {
    r.c[i] = r.c[i] >= b.c[i] ? r.c[i] - b.c[i] : r.c[i] + q - b.c[i];
  }
  return r;
}

FFElem ff_neg(const FieldParams& ctx, const FFElem& a) {
  return ff_sub(ctx, ff_zero(ctx), a);
}

namespace {

// Schoolbook product followed by reduction: alpha^n = -(psi_0 + ... +
// psi_{n-1} alpha^{n-1}) since psi is monic.
FFElem mul_generic(const FieldParams& ctx, const FFElem& a, const FFElem& b) {
  const uint32_t q = ctx.q();
  const size_t n = ctx.n();
  std::vector<uint64_t> acc(2 * n - 1, 0);
  for (size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      acc[i + j] = (acc[i + j] + static_cast<uint64_t>(a.c[i]) * b.c[j]) % q;
    }
  }
  const QPoly& psi = ctx.psi();
  for (size_t i = 2 * n - 2; i >= n && i < acc.size(); --i) {
    uint64_t c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    for (size_t j = 0; j < n; ++j) {
      if (psi[j] == 0) continue;
      acc[i - n + j] = (acc[i - n + j] + c * (q - psi[j])) % q;
    }
  }
  FFElem r = ff_zero(ctx);
  for (size_t i = 0; i < n; ++i) r.c[i] = static_cast<uint32_t>(acc[i]);
  return r;
}

}  // namespace

FFElem ff_mul(const FieldParams& ctx, const FFElem& a, const FFElem& b) {
  return mul_generic(ctx, a, b);
}

FFElem ff_inv(const FieldParams& ctx, const FFElem& a) {
  if (ff_is_zero(a)) throw config_error("inversion of zero");
  const uint32_t q = ctx.q();
  // Extended Euclid over F_q[T] on (psi, a): find u with a*u = 1 mod psi.
  QPoly r0 = ctx.psi();
  QPoly r1 = qp_trim(QPoly(a.c.begin(), a.c.end()));
  QPoly t0{};
  QPoly t1{1};
  while (!qp_is_zero(r1)) {
    auto [quo, rem] = qp_divmod(r0, r1, q);
    QPoly t2 = qp_sub(t0, qp_mul(quo, t1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd(psi, a) is a nonzero constant (psi irreducible, a != 0).
  QPoly u = qp_scale(t0, mod_inverse(r0[0], q), q);
  u.resize(ctx.n(), 0);
  return FFElem{std::move(u)};
}

FFElem ff_pow(const FieldParams& ctx, const FFElem& a, u128 e) {
  FFElem result = ff_one(ctx);
  FFElem base = a;
  while (e != 0) {
    if (e & 1) result = mul_generic(ctx, result, base);
    base = mul_generic(ctx, base, base);
    e >>= 1;
  }
  return result;
}

u128 ff_add_enc(const FieldParams& ctx, u128 a, u128 b) {
  if (ctx.q() == 2) return a ^ b;
  return ff_encode(ctx, ff_add(ctx, ff_decode(ctx, a), ff_decode(ctx, b)));
}

u128 ff_mul_enc(const FieldParams& ctx, u128 a, u128 b) {
  if (const LogTable* lt = ctx.log_table()) {
    return lt->mul(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
  }
  return ff_encode(ctx, ff_mul(ctx, ff_decode(ctx, a), ff_decode(ctx, b)));
}

u128 ff_inv_enc(const FieldParams& ctx, u128 a) {
  if (const LogTable* lt = ctx.log_table()) {
    if (a == 0) throw config_error("inversion of zero");
    return lt->inv(static_cast<uint32_t>(a));
  }
  return ff_encode(ctx, ff_inv(ctx, ff_decode(ctx, a)));
}

u128 ff_pow_enc(const FieldParams& ctx, u128 a, u128 e) {
  if (const LogTable* lt = ctx.log_table()) {
    return lt->pow(static_cast<uint32_t>(a), e);
  }
  return ff_encode(ctx, ff_pow(ctx, ff_decode(ctx, a), e));
}

// ---------------------------------------------------------------------------
// LogTable
// ---------------------------------------------------------------------------

std::unique_ptr<LogTable> LogTable::build(const FieldParams& ctx) {
  if (ctx.field_size() > kMaxFieldSize)
    throw guard_error("field too large for discrete log tables");
  auto table = std::unique_ptr<LogTable>(new LogTable());
  const uint64_t order = static_cast<uint64_t>(ctx.group_order());
  table->order_ = order;
  table->log_.assign(static_cast<size_t>(order) + 1, 0);
  table->exp_.assign(2 * static_cast<size_t>(order), 0);

  if (order == 1) {  // F_2: the unit group is trivial
    table->generator_ = 1;
    table->exp_[0] = 1;
    table->exp_[1] = 1;
    return table;
  }

  // Successive powers of a candidate fill the log table iff the candidate
  // generates the full unit group; otherwise move to the next encoding.
  for (u128 cand = 2; cand < ctx.field_size(); ++cand) {
    FFElem g = ff_decode(ctx, cand);
    FFElem x = ff_one(ctx);
    uint64_t k = 0;
    for (; k < order; ++k) {
      uint64_t xe = static_cast<uint64_t>(ff_encode(ctx, x));
      table->exp_[k] = static_cast<uint32_t>(xe);
      table->log_[xe] = static_cast<uint32_t>(k);
      x = mul_generic(ctx, x, g);
      if (k + 1 < order && ff_encode(ctx, x) == 1) break;  // order(g) = k+1 < order
    }
    if (k == order) {
      table->generator_ = static_cast<uint32_t>(cand);
      for (uint64_t i = 0; i < order; ++i) table->exp_[order + i] = table->exp_[i];
      return table;
    }
  }
  throw check_error("no generator found (unreachable: F_{q^n}^* is cyclic)");
}

const LogTable* FieldParams::log_table() const {
  if (field_size() > LogTable::kMaxFieldSize) return nullptr;
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->attempted) {
    cache_->table = LogTable::build(*this);
    cache_->attempted = true;
  }
  return cache_->table.get();
}

namespace detail {
void check_enum_guard(u128 count, u128 guard) {
  if (count > guard)
    throw guard_error("enumeration of " + fmt_u128(count) +
                      " elements exceeds guard " + fmt_u128(guard));
}
}  // namespace detail

}  // namespace itp::gf
