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

#include "itp/oracle.hpp"

#include "itp/errors.hpp"

namespace itp::oracle {

PowerOracle::PowerOracle(FieldParams ctx, Poly hidden, u128 e)
    : ctx_(std::move(ctx)), hidden_(std::move(hidden)), e_(e) {
  if (e_ < 1) throw config_error("oracle exponent must be >= 1");
  if (ctx_.group_order() % e_ != 0)
    throw config_error("oracle exponent must divide q^n - 1");
  if (!polyrat::is_monic(hidden_)) throw config_error("hidden polynomial must be monic");
  hidden_encs_ = polyrat::poly_encodings(ctx_, hidden_);
}

u128 PowerOracle::query_enc(u128 x) const {
  queries_.fetch_add(1, std::memory_order_relaxed);
  u128 fx = polyrat::eval_poly_enc(ctx_, hidden_encs_, x);
  return gf::ff_pow_enc(ctx_, fx, e_);
}

FFElem PowerOracle::query(const FFElem& x) const {
  return gf::ff_decode(ctx_, query_enc(gf::ff_encode(ctx_, x)));
}

EquivalenceVerdict indistinguishable_scan(const FieldParams& ctx, const Poly& f, const Poly& g,
                                          u128 e, u128 guard) {
  if (ctx.field_size() > guard)
    throw guard_error("full-field scan of " + u128s::to_string(ctx.field_size()) +
                      " points exceeds guard " + u128s::to_string(guard));
  const std::vector<u128> fe = polyrat::poly_encodings(ctx, f);
  const std::vector<u128> ge = polyrat::poly_encodings(ctx, g);
  EquivalenceVerdict verdict;
  verdict.method = EquivalenceVerdict::Method::kFullScan;
  verdict.scan_size = ctx.field_size();
  verdict.indistinguishable = true;
  for (u128 x = 0; x < ctx.field_size(); ++x) {
    u128 lhs = gf::ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, fe, x), e);
    u128 rhs = gf::ff_pow_enc(ctx, polyrat::eval_poly_enc(ctx, ge, x), e);
    if (lhs != rhs) {
      verdict.indistinguishable = false;
      break;
    }
  }
  return verdict;
}

EquivalenceVerdict equivalence_check(const FieldParams& ctx, const Poly& f, const Poly& g,
                                     u128 e, u128 guard) {
  if (!polyrat::is_monic(f) || !polyrat::is_monic(g))
    throw config_error("equivalence check expects monic polynomials");
  if (polyrat::deg(f) != polyrat::deg(g))
    throw config_error("equivalence check expects equal degrees");
  if (e < 1 || ctx.group_order() % e != 0)
    throw config_error("exponent must divide q^n - 1");

  const u128 k = ctx.group_order() / e;
  const u128 d = static_cast<u128>(polyrat::deg(f));
  if (k > d) {
    EquivalenceVerdict verdict;
    verdict.method = EquivalenceVerdict::Method::kDegreeArgument;
    verdict.indistinguishable = (f == g);
    return verdict;
  }
  return indistinguishable_scan(ctx, f, g, e, guard);
}

}  // namespace itp::oracle
