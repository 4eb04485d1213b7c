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


// Executable check of the universal property of insertion: the square
//
//   D_n ──x──▶ Δ
//    │         │ κ
//    ▼         ▼
//    Θ ──ι──▶ Δ ▷_x Θ
//
// commutes up to definitional equality and every commuting cone factors
// uniquely through it.

#pragma once

#include <string>
#include <vector>

#include "catt/insertion.hpp"
#include "catt/reduction.hpp"

namespace catt {

/// σ : Δ → Γ and τ : Θ → Γ agreeing on D_n.
struct Cone {
  Context gamma;
  Substitution sigma;
  Substitution tau;
};

struct ConeReport {
  bool commutes = false;  // the cone's own precondition
  bool factors = false;   // clause (b)
  bool unique = false;    // clause (c)
  std::size_t solutions = 0;
  Substitution mediator;
};

struct PushoutReport {
  bool square_commutes = false;  // clause (a)
  std::vector<ConeReport> cones;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// The substitution D_n → Θ picking out Coh Θ A id.
Substitution inner_disc_sub(const InsertionProblem &prob);

PushoutReport check_pushout(const InsertionProblem &prob,
                            const InsertionResult &res,
                            const std::vector<Cone> &cones,
                            const ReductionOptions &opts = {});

}  // namespace catt
