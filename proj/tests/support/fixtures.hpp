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


// Hand-built contexts and terms shared by the unit and acceptance tests.

#pragma once

#include <string>
#include <vector>

#include "catt/insertion.hpp"
#include "catt/pasting.hpp"
#include "catt/syntax.hpp"
#include "catt/tree.hpp"

namespace catt::testing {

inline Term v(const std::string &n) { return Term::var(n); }

/// Arrow x →_A y where A is x's declared type in `ctx`.
Type arrow(const Context &ctx, const Term &x, const Term &y);

/// Builds Coh head type σ from one argument per locally maximal variable of
/// the pasting context `head`, recovering the rest as boundaries in `ambient`.
Term instantiate(const Context &ambient, const Context &head, const Type &type,
                 const std::vector<Term> &lm_args);
/// The unbiased composite over `head` applied to locally maximal arguments.
Term unbiased_app(const Context &ambient, const Context &head,
                  const std::vector<Term> &lm_args);

/// (x:⋆)(y:⋆)(f:x→y)(z:⋆)(g:y→z) and friends, with chosen names.
Context chain_ctx(int n, const std::string &prefix = "");
/// Unbiased n-ary 1-composite of 1-cells in `ambient`.
Term comp(const Context &ambient, const std::vector<Term> &cells);

/// (a:⋆)…: 0-cells o0…on and 1-cells c1…cn forming a chain.
Context chain_ambient(int n);

/// The example pasting diagrams Δ and Θ of the insertion figure, and their
/// trees.
Context example_delta();
Context example_theta();
BataninTree example_delta_tree();
BataninTree example_theta_tree();
/// The type f·k → h·k over Δ.
Type example_delta_type();

/// All bracketings of an n-fold composite of c1…cn in chain_ambient(n), as
/// nested binary composites.
std::vector<Term> bracketings(const Context &ambient, int n);

/// A fixed globular context with cells of dimension ≤ 3 used by the
/// generators.
Context ambient_globular();

}  // namespace catt::testing
