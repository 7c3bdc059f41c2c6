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
#include <string>
#include <string_view>

namespace itp {

// 128-bit unsigned integers carry every group order, exponent and element
// encoding in this project (group orders are capped at 2^120).
using u128 = unsigned __int128;

namespace u128s {

std::string to_string(u128 v);

// Parses a decimal string; rejects empty input, non-digits and overflow.
std::optional<u128> parse(std::string_view s);

u128 gcd(u128 a, u128 b);

// lcm with overflow detection; nullopt if the result exceeds 128 bits.
std::optional<u128> checked_lcm(u128 a, u128 b);

// (a * b) mod m for any m > 0. Uses the native 128-bit product when it
// cannot overflow, otherwise falls back to shift-and-add.
u128 mulmod(u128 a, u128 b, u128 m);

u128 powmod(u128 base, u128 exp, u128 m);

// Miller-Rabin with a fixed deterministic base set. Exact below 2^64;
// above it the bases make a pseudoprime astronomically unlikely, and the
// factorizer treats a surviving composite as a certification failure.
bool is_probable_prime(u128 n);

// floor(log2(v)) for v > 0.
int bit_length(u128 v);

}  // namespace u128s
}  // namespace itp
