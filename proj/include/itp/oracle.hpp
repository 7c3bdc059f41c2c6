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

#include <atomic>
#include <cstdint>
#include <optional>

#include "itp/gf.hpp"
#include "itp/polyrat.hpp"

namespace itp::oracle {

using gf::FFElem;
using gf::FieldParams;
using polyrat::Poly;

// Black box computing x -> f(x)^e for a hidden monic polynomial f and a
// public exponent e | q^n - 1. Counts every query; the counter tolerates
// concurrent queries.
class PowerOracle {
 public:
  PowerOracle(FieldParams ctx, Poly hidden, u128 e);

  FFElem query(const FFElem& x) const;
  u128 query_enc(u128 x) const;

  u128 exponent() const { return e_; }
  uint32_t degree() const { return static_cast<uint32_t>(polyrat::deg(hidden_)); }
  uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

  const FieldParams& ctx() const { return ctx_; }

 private:
  FieldParams ctx_;
  Poly hidden_;
  std::vector<u128> hidden_encs_;
  u128 e_;
  mutable std::atomic<uint64_t> queries_{0};
};

struct EquivalenceVerdict {
  bool indistinguishable = false;
  enum class Method { kDegreeArgument, kFullScan } method = Method::kFullScan;
  std::optional<u128> scan_size;
};

inline constexpr u128 kDefaultScanGuard = static_cast<u128>(1) << 22;

// Ground truth: f(x)^e == g(x)^e for every x in F_{q^n}. This is exactly
// oracle indistinguishability. Guarded full-field scan.
EquivalenceVerdict indistinguishable_scan(const FieldParams& ctx, const Poly& f, const Poly& g,
                                          u128 e, u128 guard = kDefaultScanGuard);

// Shortcut: with K = (q^n - 1)/e > d, a nonzero f^e - g^e has degree at
// most ed < q^n - 1 and cannot vanish on all of F, so indistinguishable
// iff f = g. Falls back to the full scan when K <= d.
EquivalenceVerdict equivalence_check(const FieldParams& ctx, const Poly& f, const Poly& g,
                                     u128 e, u128 guard = kDefaultScanGuard);

}  // namespace itp::oracle
