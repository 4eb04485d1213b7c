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


// Pasting diagrams: the ⊢pd judgement, boundary contexts, discs, unbiased
// composites and locally maximal variables.

#pragma once

#include <string>
#include <vector>

#include "catt/syntax.hpp"

namespace catt {

enum class PdRule { Start, Up, Down, Done };

std::string_view to_string(PdRule rule);

/// One rule application. For Start and Down `term`/`type` give the new
/// dangling variable and its type; Up additionally records the fresh target
/// variable `target` that was introduced alongside `term`.
struct PdStep {
  PdRule rule;
  VarName term;
  Type type;
  VarName target;
};

struct PdDerivation {
  std::vector<PdStep> steps;
};

/// Decides Γ ⊢pd. Throws NotPasting naming the first offending entry.
PdDerivation check_pd(const Context &ctx);
bool is_pasting(const Context &ctx);

/// Rebuilds the context judged by a derivation.
Context replay(const PdDerivation &d);

/// ∂^ε(Γ). Requires a pasting context of dimension ≥ 1.
Context boundary_ctx(const Context &ctx, Sign eps);

/// Variables that occur in no declared type, in context order.
std::vector<VarName> locally_maximal_vars(const Context &ctx);
/// The same set; throws NotPasting on non-pasting input.
VarSet locally_maximal(const Context &ctx);

/// A pasting context with exactly one locally maximal variable.
bool is_disc(const Context &ctx);

struct DiscContext {
  int n;
  Context ctx;
};

/// D_n with variables dm0, dp0, dm1, dp1, …, dmN. The top cell is dmN.
DiscContext disc_context(int n);
VarName disc_var(int k, Sign eps);
/// The substitution D_n → Γ sending dmN to t and each lower variable to the
/// matching boundary of t.
Substitution to_disc_sub(const Context &ctx, const Term &t);

Type unbiased_type(const Context &ctx);
Term unbiased_term(const Context &ctx);
/// Coh Δ A σ with A alpha-equal to the unbiased type of Δ.
bool is_unbiased(const Term &t);

}  // namespace catt
