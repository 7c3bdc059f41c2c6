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

#include "itp/ffdiv.hpp"

#include <algorithm>
#include <set>

#include "itp/errors.hpp"

namespace itp::ffdiv {

using gf::qp_deg;
using gf::qp_is_zero;
using gf::QPoly;

Place place_infinity() { return Place{true, {}}; }

Place place_finite(QPoly monic_irreducible, uint32_t q) {
  QPoly p = gf::qp_trim(std::move(monic_irreducible));
  if (qp_deg(p) < 1 || p.back() != 1 || !gf::qp_is_irreducible(p, q))
    throw config_error("finite places must be monic irreducible polynomials");
  return Place{false, std::move(p)};
}

void FFDivisor::add(const Place& p, int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = support_.try_emplace(p, 0);
  it->second += mult;
  if (it->second == 0) support_.erase(it);
}

int64_t FFDivisor::mult_of(const Place& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? 0 : it->second;
}

int64_t FFDivisor::degree() const {
  int64_t d = 0;
  for (const auto& [p, m] : support_) d += m * p.degree();
  return d;
}

int64_t FFDivisor::height() const {
  int64_t h = 0;
  for (const auto& [p, m] : support_) h = std::max(h, m < 0 ? -m : m);
  return h;
}

bool FFDivisor::is_effective() const {
  for (const auto& [p, m] : support_)
    if (m < 0) return false;
  return true;
}

FFDivisor divisor_add(const FFDivisor& a, const FFDivisor& b) {
  FFDivisor r = a;
  for (const auto& [p, m] : b.support()) r.add(p, m);
  return r;
}

FFDivisor divisor_neg(const FFDivisor& a) {
  FFDivisor r;
  for (const auto& [p, m] : a.support()) r.add(p, -m);
  return r;
}

DivisorParts parts_and_min(const FFDivisor& d, const FFDivisor& e) {
  DivisorParts parts;
  for (const auto& [p, m] : d.support()) {
    if (m > 0) {
      parts.positive.add(p, m);
    } else {
      parts.negative.add(p, -m);
    }
  }
  // min over the union of supports; absent places count as 0.
  for (const auto& [p, m] : d.support()) parts.minimum.add(p, std::min(m, e.mult_of(p)));
  for (const auto& [p, m] : e.support()) {
    if (d.mult_of(p) == 0) parts.minimum.add(p, std::min<int64_t>(m, 0));
  }
  return parts;
}

bool RatFnQ::operator<(const RatFnQ& o) const {
  auto lex = [](const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  };
  int c = lex(num, o.num);
  if (c != 0) return c < 0;
  return lex(den, o.den) < 0;
}

RatFnQ make_ratfnq(uint32_t q, QPoly num, QPoly den) {
  num = gf::qp_trim(std::move(num));
  den = gf::qp_trim(std::move(den));
  if (qp_is_zero(den)) throw config_error("rational function with zero denominator");
  if (qp_is_zero(num)) return RatFnQ{{}, {1}};
  QPoly g = gf::qp_gcd(num, den, q);
  if (qp_deg(g) > 0) {
    num = gf::qp_divmod(num, g, q).first;
    den = gf::qp_divmod(den, g, q).first;
  }
  if (den.back() != 1) {
    uint32_t inv = gf::mod_inverse(den.back(), q);
    num = gf::qp_scale(num, inv, q);
    den = gf::qp_scale(den, inv, q);
  }
  return RatFnQ{std::move(num), std::move(den)};
}

RatFnQ ratfnq_mul(uint32_t q, const RatFnQ& a, const RatFnQ& b) {
  return make_ratfnq(q, gf::qp_mul(a.num, b.num, q), gf::qp_mul(a.den, b.den, q));
}

std::vector<QPoly> monic_irreducibles(uint32_t q, uint32_t k) {
  if (k < 1) throw config_error("irreducible degree must be >= 1");
  std::vector<QPoly> out;
  u128 qk = 1;
  for (uint32_t i = 0; i < k; ++i) {
    qk *= q;
    if (qk > (static_cast<u128>(1) << 26))
      throw guard_error("too many monic candidates of degree " + std::to_string(k));
  }
  for (u128 v = 0; v < qk; ++v) {
    QPoly cand = gf::qp_decode(v, q);
    cand.resize(k, 0);
    cand.push_back(1);
    if (gf::qp_is_irreducible(cand, q)) out.push_back(std::move(cand));
  }
  return out;
}

namespace {

int moebius(uint32_t n) {
  int mu = 1;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

u128 checked_upow(uint32_t base, uint32_t exp) {
  constexpr u128 kCap = static_cast<u128>(1) << 120;
  u128 v = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (v > kCap / base) throw guard_error("power exceeds the 2^120 budget");
    v *= base;
  }
  return v;
}

// Factors a nonzero polynomial into monic irreducibles by trial division;
// the leading unit is dropped (it carries no places).
std::map<QPoly, int64_t> factor_monic(QPoly f, uint32_t q) {
  std::map<QPoly, int64_t> factors;
  f = gf::qp_make_monic(gf::qp_trim(std::move(f)), q);
  for (uint32_t k = 1; qp_deg(f) >= static_cast<int>(2 * k); ++k) {
    for (const QPoly& p : monic_irreducibles(q, k)) {
      for (;;) {
        auto [quo, rem] = gf::qp_divmod(f, p, q);
        if (!qp_is_zero(rem)) break;
        ++factors[p];
        f = std::move(quo);
      }
      if (qp_deg(f) < static_cast<int>(2 * k)) break;
    }
  }
  if (qp_deg(f) >= 1) ++factors[f];  // leftover of degree > deg/2 is irreducible
  return factors;
}

}  // namespace

uint64_t count_monic_irreducibles(uint32_t q, uint32_t k) {
  if (k < 1) throw config_error("irreducible degree must be >= 1");
  __int128 sum = 0;
  for (uint32_t j = 1; j <= k; ++j) {
    if (k % j != 0) continue;
    int mu = moebius(j);
    if (mu == 0) continue;
    u128 term = checked_upow(q, k / j);
    sum += mu > 0 ? static_cast<__int128>(term) : -static_cast<__int128>(term);
  }
  return static_cast<uint64_t>(sum / k);
}

FFDivisor principal_divisor(uint32_t q, const RatFnQ& f) {
  if (qp_is_zero(f.num)) throw config_error("the zero function has no divisor");
  FFDivisor div;
  for (const auto& [p, m] : factor_monic(f.num, q)) div.add(place_finite(p, q), m);
  for (const auto& [p, m] : factor_monic(f.den, q)) div.add(place_finite(p, q), -m);
  div.add(place_infinity(), qp_deg(f.den) - qp_deg(f.num));
  return div;
}

uint64_t tau(const FFDivisor& d) {
  if (!d.is_effective()) throw config_error("tau is defined for effective divisors only");
  u128 product = 1;
  for (const auto& [p, m] : d.support()) {
    product *= static_cast<u128>(m) + 1;
    if (product > ~static_cast<uint64_t>(0)) throw guard_error("tau overflows 64 bits");
  }
  return static_cast<uint64_t>(product);
}

EffectiveDivisorCounts count_effective_divisors(uint32_t q, uint32_t r) {
  if (!gf::is_small_prime(q)) throw config_error("q must be prime");
  if (r > 12) throw config_error("counting tables support r <= 12");
  // Everything below stays within u64 when q^{2r} does.
  if (checked_upow(q, 2 * r) > (static_cast<u128>(1) << 63))
    throw guard_error("counting table too large: q^{2r} above 2^63");

  // Places of F_q(T) by degree: monic irreducibles, plus infinity (deg 1).
  std::vector<uint64_t> places(r + 1, 0);
  for (uint32_t k = 1; k <= r; ++k) places[k] = count_monic_irreducibles(q, k);
  if (r >= 1) places[1] += 1;

  // dp[s] = effective divisors of degree s using places of degree <= k.
  std::vector<uint64_t> dp(r + 1, 0);
  dp[0] = 1;
  for (uint32_t k = 1; k <= r; ++k) {
    if (places[k] == 0) continue;
    std::vector<uint64_t> next(r + 1, 0);
    for (uint32_t s = 0; s <= r; ++s) {
      if (dp[s] == 0) continue;
      // Choose a degree-jk multiset of degree-k places: C(P_k + j - 1, j).
      for (uint32_t j = 0; s + j * k <= r; ++j) {
        u128 multisets = 1;
        for (uint32_t i = 1; i <= j; ++i) {
          multisets = multisets * (places[k] + i - 1) / i;
        }
        next[s + j * k] += dp[s] * static_cast<uint64_t>(multisets);
      }
    }
    dp = std::move(next);
  }

  EffectiveDivisorCounts counts;
  counts.by_degree = dp;
  counts.cumulative.resize(r + 1, 0);
  counts.bound.resize(r + 1, 1);
  uint64_t running = 0;
  for (uint32_t s = 0; s <= r; ++s) {
    running += dp[s];
    counts.cumulative[s] = running;
    counts.bound[s] = checked_upow(q, 2 * s);
  }
  return counts;
}

PoleBoundReport height_and_pole_bound(uint32_t q, const RatFnQ& f) {
  if (qp_is_zero(f.num)) throw config_error("the zero function has no pole divisor");
  PoleBoundReport report;
  report.height = f.height();
  FFDivisor div = principal_divisor(q, f);
  DivisorParts parts = parts_and_min(div, div);
  report.deg_pole_part = parts.negative.degree();
  report.bound_ok = report.deg_pole_part <= 2 * static_cast<int64_t>(report.height);
  return report;
}

RatFnProductSet product_set_ratfns(uint32_t q, const std::vector<RatFnQ>& a, uint32_t nu,
                                   u128 work_guard) {
  if (nu < 1) throw config_error("product set requires nu >= 1");
  std::set<RatFnQ> base;
  for (const RatFnQ& f : a) {
    if (qp_is_zero(f.num)) throw config_error("product sets require nonzero functions");
    base.insert(make_ratfnq(q, f.num, f.den));
  }

  RatFnProductSet result;
  std::set<RatFnQ> current = base;
  auto track_height = [&result](const std::set<RatFnQ>& s) {
    for (const RatFnQ& f : s) result.max_height = std::max(result.max_height, f.height());
  };
  track_height(current);

  for (uint32_t step = 2; step <= nu; ++step) {
    u128 work = static_cast<u128>(current.size()) * base.size();
    if (work > work_guard)
      throw guard_error("product-set step exceeds the work guard");
    std::set<RatFnQ> next;
    for (const RatFnQ& x : current) {
      for (const RatFnQ& y : base) next.insert(ratfnq_mul(q, x, y));
    }
    current = std::move(next);
    track_height(current);
  }

  result.set.assign(current.begin(), current.end());
  double denom = 1.0;
  for (uint32_t i = 0; i < nu; ++i) denom *= static_cast<double>(base.size());
  result.ratio = base.empty() ? 0.0 : static_cast<double>(result.set.size()) / denom;
  return result;
}

}  // namespace itp::ffdiv
