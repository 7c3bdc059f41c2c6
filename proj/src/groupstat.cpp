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

#include "itp/groupstat.hpp"

#include <algorithm>
#include <cmath>

#include "itp/errors.hpp"
#include "itp/subspace.hpp"

namespace itp::groupstat {

using u128s::is_probable_prime;
using u128s::mulmod;
using u128s::to_string;

u128 Factorization::value() const {
  u128 v = 1;
  for (const auto& [p, k] : factors) {
    for (uint32_t i = 0; i < k; ++i) v *= p;
  }
  return v;
}

namespace {

// Brent's cycle-finding variant of Pollard's rho. Deterministic: the
// polynomial increment c steps through 1, 2, 3, ... until a factor splits.
u128 rho_split(u128 n) {
  constexpr uint64_t kMaxIterations = 1ull << 27;
  for (u128 c = 1; c < 64; ++c) {
    u128 x = 2, y = 2, d = 1;
    uint64_t count = 0, limit = 2;
    while (d == 1 && count < kMaxIterations) {
      x = mulmod(x, x, n) + c;
      if (x >= n) x -= n;
      u128 diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      d = u128s::gcd(diff, n);
      if (++count == limit) {
        y = x;
        limit *= 2;
      }
    }
    if (d != 1 && d != n) return d;
  }
  throw check_error("factorization failure: rho could not split " + to_string(n));
}

void factor_recursive(u128 v, std::vector<u128>& primes) {
  if (v == 1) return;
  if (is_probable_prime(v)) {
    primes.push_back(v);
    return;
  }
  u128 d = rho_split(v);
  factor_recursive(d, primes);
  factor_recursive(v / d, primes);
}

}  // namespace

Factorization factor_u128(u128 v) {
  if (v == 0) throw config_error("cannot factor zero");
  std::vector<u128> primes;
  while ((v & 1) == 0) {
    primes.push_back(2);
    v >>= 1;
  }
  for (u128 d = 3; d <= 1000000 && d * d <= v; d += 2) {
    while (v % d == 0) {
      primes.push_back(d);
      v /= d;
    }
  }
  factor_recursive(v, primes);
  std::sort(primes.begin(), primes.end());

  Factorization fact;
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    fact.factors.emplace_back(primes[i], static_cast<uint32_t>(j - i));
    i = j;
  }
  return fact;
}

Factorization factor_group_order(const FieldParams& ctx) {
  Factorization fact = factor_u128(ctx.group_order());
  if (fact.value() != ctx.group_order())
    throw check_error("factorization self-check failed for the group order");
  return fact;
}

u128 element_order_enc(const FieldParams& ctx, const Factorization& fact, u128 x) {
  if (x == 0) throw config_error("the zero element has no multiplicative order");
  u128 order = ctx.group_order();
  for (const auto& [p, k] : fact.factors) {
    for (uint32_t i = 0; i < k; ++i) {
      u128 candidate = order / p;
      if (order % p != 0 || gf::ff_pow_enc(ctx, x, candidate) != 1) break;
      order = candidate;
    }
  }
  return order;
}

u128 element_order(const FieldParams& ctx, const Factorization& fact, const FFElem& x) {
  return element_order_enc(ctx, fact, gf::ff_encode(ctx, x));
}

namespace {

struct ValueCollector {
  // Bitmap dedup for table-sized fields, sort+unique otherwise.
  explicit ValueCollector(const FieldParams& ctx) {
    if (ctx.field_size() <= gf::LogTable::kMaxFieldSize) {
      seen.assign(static_cast<size_t>(ctx.field_size()), 0);
    }
  }

  void insert(u128 v) {
    if (!seen.empty()) {
      size_t idx = static_cast<size_t>(v);
      if (!seen[idx]) {
        seen[idx] = 1;
        out.push_back(v);
      }
    } else {
      out.push_back(v);
    }
  }

  std::vector<u128> take() {
    std::sort(out.begin(), out.end());
    if (seen.empty()) out.erase(std::unique(out.begin(), out.end()), out.end());
    return std::move(out);
  }

  std::vector<uint8_t> seen;
  std::vector<u128> out;
};

struct ValueSweep {
  ValueSweep(const FieldParams& ctx, const RatFn& r)
      : ctx_(ctx),
        num_(polyrat::poly_encodings(ctx, r.num)),
        den_(polyrat::poly_encodings(ctx, r.den)),
        collector_(ctx) {}

  void visit(u128 x) {
    ++summary_.domain_size;
    u128 d = polyrat::eval_poly_enc(ctx_, den_, x);
    if (d == 0) {
      ++summary_.poles;
      return;
    }
    u128 nval = polyrat::eval_poly_enc(ctx_, num_, x);
    if (nval == 0) {
      ++summary_.zero_hits;
      return;
    }
    collector_.insert(gf::ff_mul_enc(ctx_, nval, gf::ff_inv_enc(ctx_, d)));
  }

  ValueSetSummary finish() {
    summary_.values = collector_.take();
    return std::move(summary_);
  }

  const FieldParams& ctx_;
  std::vector<u128> num_, den_;
  ValueCollector collector_;
  ValueSetSummary summary_;
};

}  // namespace

ValueSetSummary value_set(const FieldParams& ctx, const RatFn& r, std::span<const u128> points) {
  ValueSweep sweep(ctx, r);
  for (u128 x : points) sweep.visit(x);
  return sweep.finish();
}

ValueSetSummary value_set_Vm(const FieldParams& ctx, const RatFn& r, uint32_t m, u128 guard) {
  ValueSweep sweep(ctx, r);
  subspace::enumerate_Vm(ctx, m, [&](const FFElem&, u128 xe) { sweep.visit(xe); }, guard);
  return sweep.finish();
}

SubgroupDesc smallest_containing_subgroup(const FieldParams& ctx, const Factorization& fact,
                                          std::span<const u128> a) {
  if (a.empty()) throw config_error("smallest containing subgroup of an empty set");
  u128 lcm = 1;
  for (u128 x : a) {
    if (x == 0) throw config_error("no multiplicative subgroup contains zero");
    u128 order = element_order_enc(ctx, fact, x);
    // Orders divide q^n - 1, so the lcm stays within the order budget.
    lcm = *u128s::checked_lcm(lcm, order);
  }
  return SubgroupDesc{lcm};
}

ErsResult e_r_of_subspace(const FieldParams& ctx, const Poly& f, const Poly& g, uint32_t m,
                          u128 guard) {
  RatFn r = polyrat::normalize_rat(ctx, f, g);
  ValueSetSummary vs = value_set_Vm(ctx, r, m, guard);
  if (vs.values.empty())
    throw check_error("value set has no nonzero values (all zeros or poles)");
  Factorization fact = factor_group_order(ctx);
  SubgroupDesc sg = smallest_containing_subgroup(ctx, fact, vs.values);
  return ErsResult{sg, std::move(vs)};
}

std::vector<u128> product_set(const FieldParams& ctx, std::span<const u128> a, uint32_t nu,
                              u128 work_guard) {
  if (nu < 1) throw config_error("product set requires nu >= 1");
  std::vector<u128> base(a.begin(), a.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (!base.empty() && base.front() == 0)
    throw config_error("product sets are defined inside the unit group; remove 0");

  std::vector<u128> current = base;
  for (uint32_t step = 2; step <= nu; ++step) {
    u128 work = static_cast<u128>(current.size()) * base.size();
    if (work > work_guard)
      throw guard_error("product-set step " + std::to_string(step) + " needs " +
                        to_string(work) + " products, above the work guard " +
                        to_string(work_guard));
    ValueCollector collector(ctx);
    for (u128 x : current) {
      for (u128 y : base) collector.insert(gf::ff_mul_enc(ctx, x, y));
    }
    current = collector.take();
  }
  return current;
}

GrowthReport growth_report(const FieldParams& ctx, const Poly& f, const Poly& g, uint32_t m,
                           uint32_t nu, u128 enum_guard, u128 work_guard) {
  RatFn r = polyrat::normalize_rat(ctx, f, g);
  ValueSetSummary vs = value_set_Vm(ctx, r, m, enum_guard);

  GrowthReport report;
  report.size_a = vs.size();
  report.zero_hits = vs.zero_hits;
  report.poles = vs.poles;

  const uint32_t d = static_cast<uint32_t>(std::max(polyrat::deg(f), polyrat::deg(g)));
  const double qm = std::pow(static_cast<double>(ctx.q()), static_cast<double>(m));
  if (d > 0) {
    report.preimage_floor =
        (qm - static_cast<double>(vs.zero_hits) - static_cast<double>(vs.poles)) / d;
    // Exact integer comparison: size_a * d >= q^m - zero_hits - poles.
    u128 lhs = static_cast<u128>(report.size_a) * d;
    u128 rhs = subspace::subspace_size(ctx, m) - vs.zero_hits - vs.poles;
    report.floor_ok = lhs >= rhs;
  }

  if (!vs.values.empty()) {
    Factorization fact = factor_group_order(ctx);
    report.e_order = smallest_containing_subgroup(ctx, fact, vs.values).order;
    std::vector<u128> pset = product_set(ctx, vs.values, nu, work_guard);
    report.size_a_nu = pset.size();
    report.rho = std::log(static_cast<double>(report.size_a_nu)) /
                 (static_cast<double>(nu) * static_cast<double>(m) *
                  std::log(static_cast<double>(ctx.q())));
  }
  return report;
}

}  // namespace itp::groupstat
