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

#include "itp/polyrat.hpp"

#include <algorithm>

#include "itp/errors.hpp"

namespace itp::polyrat {

using gf::ff_add;
using gf::ff_decode;
using gf::ff_encode;
using gf::ff_inv;
using gf::ff_is_zero;
using gf::ff_mul;
using gf::ff_one;
using gf::ff_sub;
using gf::ff_zero;

bool is_monic(const Poly& p) {
  if (p.c.empty()) return false;
  const std::vector<uint32_t>& lead = p.c.back().c;
  if (lead.empty() || lead[0] != 1) return false;
  return std::all_of(lead.begin() + 1, lead.end(), [](uint32_t v) { return v == 0; });
}

Poly trim(Poly p) {
  while (!p.c.empty() && ff_is_zero(p.c.back())) p.c.pop_back();
  return p;
}

Poly poly_from_encodings(const FieldParams& ctx, const std::vector<u128>& encs) {
  Poly p;
  p.c.reserve(encs.size());
  for (u128 e : encs) p.c.push_back(ff_decode(ctx, e));
  return trim(std::move(p));
}

std::vector<u128> poly_encodings(const FieldParams& ctx, const Poly& p) {
  std::vector<u128> encs;
  encs.reserve(p.c.size());
  for (const FFElem& e : p.c) encs.push_back(ff_encode(ctx, e));
  return encs;
}

Poly add(const FieldParams& ctx, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), ff_zero(ctx));
  for (size_t i = 0; i < r.c.size(); ++i) {
    const FFElem& av = i < a.c.size() ? a.c[i] : ff_zero(ctx);
    const FFElem& bv = i < b.c.size() ? b.c[i] : ff_zero(ctx);
    r.c[i] = ff_add(ctx, av, bv);
  }
  return trim(std::move(r));
}

Poly sub(const FieldParams& ctx, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), ff_zero(ctx));
  for (size_t i = 0; i < r.c.size(); ++i) {
    const FFElem& av = i < a.c.size() ? a.c[i] : ff_zero(ctx);
    const FFElem& bv = i < b.c.size() ? b.c[i] : ff_zero(ctx);
    r.c[i] = ff_sub(ctx, av, bv);
  }
  return trim(std::move(r));
}

Poly mul(const FieldParams& ctx, const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly r;
  r.c.resize(a.c.size() + b.c.size() - 1, ff_zero(ctx));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (ff_is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = ff_add(ctx, r.c[i + j], ff_mul(ctx, a.c[i], b.c[j]));
    }
  }
  return trim(std::move(r));
}

Poly scale(const FieldParams& ctx, const Poly& a, const FFElem& s) {
  if (ff_is_zero(s)) return {};
  Poly r = a;
  for (FFElem& e : r.c) e = ff_mul(ctx, e, s);
  return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const FieldParams& ctx, const Poly& a, const Poly& b) {
  if (is_zero(b)) throw config_error("polynomial division by zero");
  if (a.c.size() < b.c.size()) return {{}, a};
  Poly rem = a;
  Poly quo;
  quo.c.resize(a.c.size() - b.c.size() + 1, ff_zero(ctx));
  const FFElem lead_inv = ff_inv(ctx, b.c.back());
  for (size_t i = a.c.size() - 1;; --i) {
    if (!ff_is_zero(rem.c[i])) {
      FFElem factor = ff_mul(ctx, rem.c[i], lead_inv);
      size_t shift = i - (b.c.size() - 1);
      quo.c[shift] = factor;
      for (size_t j = 0; j < b.c.size(); ++j) {
        rem.c[shift + j] = ff_sub(ctx, rem.c[shift + j], ff_mul(ctx, factor, b.c[j]));
      }
    }
    if (i == b.c.size() - 1) break;
  }
  return {trim(std::move(quo)), trim(std::move(rem))};
}

Poly make_monic(const FieldParams& ctx, const Poly& a) {
  if (is_zero(a)) return a;
  if (is_monic(a)) return a;
  return scale(ctx, a, ff_inv(ctx, a.c.back()));
}

FFElem eval_poly(const FieldParams& ctx, const Poly& p, const FFElem& x) {
  FFElem acc = ff_zero(ctx);
  for (size_t i = p.c.size(); i-- > 0;) {
    acc = ff_add(ctx, ff_mul(ctx, acc, x), p.c[i]);
  }
  return acc;
}

Poly gcd_poly(const FieldParams& ctx, const Poly& a, const Poly& b) {
  if (is_zero(a) && is_zero(b)) throw config_error("gcd(0, 0) is undefined");
  Poly r0 = a;
  Poly r1 = b;
  while (!is_zero(r1)) {
    Poly rem = divmod(ctx, r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return make_monic(ctx, r0);
}

RatFn normalize_rat(const FieldParams& ctx, const Poly& f, const Poly& g) {
  if (is_zero(g)) throw config_error("rational function with zero denominator");
  if (is_zero(f)) return RatFn{{}, Poly{{ff_one(ctx)}}};
  Poly common = gcd_poly(ctx, f, g);
  Poly num = f;
  Poly den = g;
  if (deg(common) > 0) {
    num = divmod(ctx, num, common).first;
    den = divmod(ctx, den, common).first;
  }
  if (!is_monic(den)) {
    FFElem inv_lead = ff_inv(ctx, den.c.back());
    num = scale(ctx, num, inv_lead);
    den = scale(ctx, den, inv_lead);
  }
  return RatFn{std::move(num), std::move(den)};
}

std::optional<FFElem> eval_rat(const FieldParams& ctx, const RatFn& r, const FFElem& x) {
  FFElem den_val = eval_poly(ctx, r.den, x);
  if (ff_is_zero(den_val)) return std::nullopt;
  FFElem num_val = eval_poly(ctx, r.num, x);
  return ff_mul(ctx, num_val, ff_inv(ctx, den_val));
}

Poly random_monic(const FieldParams& ctx, uint32_t d, Rng& rng) {
  if (d < 1) throw config_error("random_monic requires degree >= 1");
  Poly p;
  p.c.reserve(d + 1);
  for (uint32_t i = 0; i < d; ++i) {
    FFElem e = ff_zero(ctx);
    for (uint32_t j = 0; j < ctx.n(); ++j)
      e.c[j] = static_cast<uint32_t>(rng.below(ctx.q()));
    p.c.push_back(std::move(e));
  }
  p.c.push_back(ff_one(ctx));
  return p;
}

Poly random_monic(const FieldParams& ctx, uint32_t d, uint64_t seed) {
  Rng rng(seed);
  return random_monic(ctx, d, rng);
}

u128 eval_poly_enc(const FieldParams& ctx, const std::vector<u128>& coeff_encs, u128 x) {
  if (const gf::LogTable* lt = ctx.log_table()) {
    const uint32_t xe = static_cast<uint32_t>(x);
    uint32_t acc = 0;
    for (size_t i = coeff_encs.size(); i-- > 0;) {
      acc = static_cast<uint32_t>(
          gf::ff_add_enc(ctx, lt->mul(acc, xe), static_cast<uint32_t>(coeff_encs[i])));
    }
    return acc;
  }
  u128 acc = 0;
  for (size_t i = coeff_encs.size(); i-- > 0;) {
    acc = gf::ff_add_enc(ctx, gf::ff_mul_enc(ctx, acc, x), coeff_encs[i]);
  }
  return acc;
}

}  // namespace itp::polyrat
