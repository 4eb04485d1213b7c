// Copyright 2026 The catt-sa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Ordinals below ω^ω in Cantor normal form, with the natural (Hessenberg)
// sum, and the syntactic depth measure on raw syntax.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "catt/syntax.hpp"

namespace catt {

/// ⊞_e ω^e · c_e, stored as the coefficient vector c indexed by exponent.
/// Trailing zero coefficients are always trimmed, so equal ordinals have
/// equal representations.
class Ordinal {
 public:
  Ordinal() = default;
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega_pow(int e, std::uint64_t coeff = 1);
  static Ordinal from_coefficients(std::vector<std::uint64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of ω^e (zero beyond the leading exponent).
  std::uint64_t coefficient(int e) const;
  /// Leading exponent, or -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::uint64_t> &coefficients() const { return coeffs_; }

  friend bool operator==(const Ordinal &, const Ordinal &) = default;
  friend std::strong_ordering operator<=>(const Ordinal &a, const Ordinal &b);

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

Ordinal nat_sum(const Ordinal &a, const Ordinal &b);
inline Ordinal omega_pow(int e) { return Ordinal::omega_pow(e); }
inline bool ord_lt(const Ordinal &a, const Ordinal &b) { return a < b; }

/// Renders e.g. "ω^2·3 ⊞ ω ⊞ 5"; zero renders as "0".
std::string to_string(const Ordinal &a);

Ordinal syntactic_depth(const Term &t);
Ordinal syntactic_depth(const Type &a);
Ordinal syntactic_depth(const Substitution &s);

}  // namespace catt
