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

#include <cmath>

#include "itp/errors.hpp"
#include "itp/subspace.hpp"

namespace itp::tester {

namespace {

bool near_integer(long double v) {
  constexpr long double kTol = 1.0L / (static_cast<long double>(1ull << 40));
  return std::fabs(v - std::round(v)) < kTol;
}

// q^m > e*d without overflowing the 128-bit budget.
bool guaranteed_regime(const FieldParams& ctx, uint32_t m, u128 e, uint32_t d) {
  u128 qm = subspace::subspace_size(ctx, m);
  if (d == 0) return true;
  return e <= (qm - 1) / d;
}

}  // namespace

TestParams choose_params(const FieldParams& ctx, u128 e, uint32_t d, double c,
                         std::optional<uint32_t> nu_override,
                         std::optional<uint32_t> m_override) {
  if (e < 2) throw config_error("choose_params requires e >= 2");
  if (ctx.group_order() % e != 0) throw config_error("e must divide q^n - 1");
  if (d < 1) throw config_error("choose_params requires degree d >= 1");
  if (!(c > 0.0) || c > 1.0) throw config_error("tuning constant c must lie in (0, 1]");

  TestParams params;
  params.d = d;
  params.e = e;
  params.c = c;

  const long double log_e = std::log(static_cast<long double>(e));
  const long double log_q = std::log(static_cast<long double>(ctx.q()));
  const long double n = static_cast<long double>(ctx.n());
  params.delta = static_cast<double>(log_e / (n * log_q));

  if (nu_override) {
    params.nu = *nu_override;
    params.nu_overridden = true;
    if (params.nu < 1) throw config_error("nu override must be >= 1");
  } else {
    const long double exponent = 1.0L / (2.0L * d);
    const long double nu_arg = std::pow(static_cast<long double>(c), 1.0L + exponent) /
                               std::pow(2.0L * (log_e / (n * log_q)), exponent);
    params.near_integer_boundary |= near_integer(nu_arg);
    long double nu_floor = std::floor(nu_arg);
    params.nu = nu_floor < 1.0L ? 1u : static_cast<uint32_t>(nu_floor);
  }

  if (m_override) {
    params.m = *m_override;
    params.m_overridden = true;
    if (params.m < 1 || params.m > ctx.n())
      throw config_error("m override must lie in [1, n]");
  } else {
    const long double m_arg = 2.0L * log_e / (params.nu * log_q);
    params.near_integer_boundary |= near_integer(m_arg);
    long double m_floor = std::floor(m_arg);
    if (m_floor < 1.0L) {
      params.m = 1;
      params.m_clamped = true;
    } else if (m_floor > n) {
      params.m = ctx.n();
      params.m_clamped = true;
    } else {
      params.m = static_cast<uint32_t>(m_floor);
    }
  }
  return params;
}

TestReport subspace_test(const OracleFn& oracle_f, const OracleFn& oracle_g,
                         const FieldParams& ctx, const TestParams& params, u128 guard) {
  const u128 qm = subspace::subspace_size(ctx, params.m);
  gf::detail::check_enum_guard(qm, guard);

  TestReport report;
  report.m = params.m;
  report.nu = params.nu;
  report.guaranteed = guaranteed_regime(ctx, params.m, params.e, params.d);
  for (u128 x = 0; x < qm; ++x) {
    u128 lhs = oracle_f(x);
    u128 rhs = oracle_g(x);
    ++report.queries_f;
    ++report.queries_g;
    if (lhs != rhs) {
      report.verdict = TestReport::Verdict::kDistinct;
      report.witness = x;
      return report;
    }
  }
  report.verdict = TestReport::Verdict::kEqualOrIndistinguishable;
  return report;
}

TestReport naive_test(const OracleFn& oracle_f, const OracleFn& oracle_g,
                      const FieldParams& ctx, u128 e, uint32_t d, u128 guard) {
  // ed + 1 distinct inputs must exist.
  if (d > 0 && e > (ctx.field_size() - 1) / d)
    throw config_error("field too small: naive test needs e*d + 1 <= q^n");
  const u128 queries = static_cast<u128>(e) * d + 1;
  gf::detail::check_enum_guard(queries, guard);

  TestReport report;
  for (u128 x = 0; x < queries; ++x) {
    u128 lhs = oracle_f(x);
    u128 rhs = oracle_g(x);
    ++report.queries_f;
    ++report.queries_g;
    if (lhs != rhs) {
      report.verdict = TestReport::Verdict::kDistinct;
      report.witness = x;
      return report;
    }
  }
  report.verdict = TestReport::Verdict::kEqualOrIndistinguishable;
  return report;
}

std::optional<uint32_t> witness_profile(const FieldParams& ctx, const Poly& f, const Poly& g,
                                        u128 e, u128 guard) {
  gf::detail::check_enum_guard(ctx.field_size(), guard);
  const std::vector<u128> fe = polyrat::poly_encodings(ctx, f);
  const std::vector<u128> ge = polyrat::poly_encodings(ctx, g);

  // Encoding order visits V_1, then V_2 \ V_1, and so on, so the first
  // mismatch has minimal support.
  for (u128 x = 0; x < ctx.field_size(); ++x) {
    u128 lhs = gf::ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, fe, x), e);
    u128 rhs = gf::ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, ge, x), e);
    if (lhs != rhs) {
      uint32_t m = 1;
      u128 v = x;
      while (v >= ctx.q()) {
        v /= ctx.q();
        ++m;
      }
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace itp::tester
