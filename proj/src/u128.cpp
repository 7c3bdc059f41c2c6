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

#include "itp/u128.hpp"

#include <algorithm>

namespace itp::u128s {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<u128> parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    unsigned digit = static_cast<unsigned>(ch - '0');
    if (v > (kMax - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<u128> checked_lcm(u128 a, u128 b) {
  if (a == 0 || b == 0) return static_cast<u128>(0);
  u128 g = gcd(a, b);
  u128 q = a / g;
  constexpr u128 kMax = ~static_cast<u128>(0);
  if (q != 0 && b > kMax / q) return std::nullopt;
  return q * b;
}

u128 mulmod(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  // Safe to multiply directly when both operands fit in 64 bits.
  if ((a >> 64) == 0 && (b >> 64) == 0) return (a * b) % m;
  if (a < b) std::swap(a, b);
  u128 result = 0;
  while (b != 0) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

u128 powmod(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  u128 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int bit_length(u128 v) {
  int bits = -1;
  while (v != 0) {
    v >>= 1;
    ++bits;
  }
  return bits;
}

namespace {

bool miller_rabin_witness(u128 n, u128 a, u128 d, int r) {
  a %= n;
  if (a == 0) return false;
  u128 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_probable_prime(u128 n) {
  if (n < 2) return false;
  for (u128 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u128 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // First 24 primes; exact for n < 2^64 (the first 12 already suffice).
  for (u128 a : {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

}  // namespace itp::u128s
