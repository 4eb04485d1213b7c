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


#include "catt/ordinal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace catt {

Ordinal Ordinal::finite(std::uint64_t n) { return omega_pow(0, n); }

Ordinal Ordinal::omega_pow(int e, std::uint64_t coeff) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Ordinal out;
  out.coeffs_.assign(static_cast<std::size_t>(e) + 1, 0);
  out.coeffs_[static_cast<std::size_t>(e)] = coeff;
  out.trim();
  return out;
}

Ordinal Ordinal::from_coefficients(std::vector<std::uint64_t> coeffs) {
  Ordinal out;
  out.coeffs_ = std::move(coeffs);
  out.trim();
  return out;
}

std::uint64_t Ordinal::coefficient(int e) const {
  if (e < 0 || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e)];
}

void Ordinal::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::strong_ordering operator<=>(const Ordinal &a, const Ordinal &b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int e = a.degree(); e >= 0; --e) {
    if (auto c = a.coefficient(e) <=> b.coefficient(e); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Ordinal nat_sum(const Ordinal &a, const Ordinal &b) {
  std::vector<std::uint64_t> out(
      static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), 0);
  for (std::size_t e = 0; e < out.size(); ++e) {
    out[e] = a.coefficient(static_cast<int>(e)) +
             b.coefficient(static_cast<int>(e));
  }
  return Ordinal::from_coefficients(std::move(out));
}

std::string to_string(const Ordinal &a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int e = a.degree(); e >= 0; --e) {
    const std::uint64_t c = a.coefficient(e);
    if (c == 0) continue;
    if (!out.empty()) out += " ⊞ ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    out += e == 1 ? std::string("ω") : fmt::format("ω^{}", e);
    if (c != 1) out += fmt::format("·{}", c);
  }
  return out;
}

Ordinal syntactic_depth(const Term &t) {
  if (t.is_var()) return {};
  return nat_sum(nat_sum(Ordinal::omega_pow(t.type().dim()),
                         syntactic_depth(t.type())),
                 syntactic_depth(t.sub()));
}

Ordinal syntactic_depth(const Type &a) {
  if (a.is_star()) return {};
  return nat_sum(nat_sum(syntactic_depth(a.src()), syntactic_depth(a.base())),
                 syntactic_depth(a.tgt()));
}

Ordinal syntactic_depth(const Substitution &s) {
  Ordinal out;
  for (const auto &e : s) out = nat_sum(out, syntactic_depth(e.term));
  return out;
}

}  // namespace catt
