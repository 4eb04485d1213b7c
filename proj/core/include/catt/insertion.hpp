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


// Insertion of one pasting diagram into another along a locally maximal
// variable, together with the internal and external substitutions.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "catt/syntax.hpp"
#include "catt/tree.hpp"

namespace catt {

struct InsertionProblem {
  Context outer;   // Δ
  VarName x;       // locally maximal in Δ
  Context inner;   // Θ
  Type inner_type; // A, with Θ ⊢ A and dim(A) = dim(x)
};

/// Where a variable of the inserted context came from.
struct Origin {
  bool from_inner;
  VarName original;
};

struct InsertionResult {
  InsertionProblem problem;
  TreePath path;            // branching path of x in ⌈Δ⌉
  Context inserted;         // Δ ▷_x Θ
  Substitution iota;        // Θ → Δ ▷_x Θ
  Substitution kappa;       // Δ → Δ ▷_x Θ
  std::map<VarName, VarName> renaming;  // Θ name ↦ name in the result
  std::vector<Origin> origin;           // parallel to `inserted`
  std::vector<VarName> erased;          // Δ variables absent from the result
};

/// Max n ≤ dim(A) such that every boundary term of A of dimension < n is a
/// variable.
int type_linear_height(const Type &a);

/// Throws NotPasting, NotLocallyMaximal, DimensionError or
/// LinearHeightTooSmall when the problem is not an insertion.
InsertionResult insert_ctx(const InsertionProblem &prob);

/// σ ▷_x τ. Throws HeadMismatch unless σ(x) is Coh Θ A τ up to alpha.
Substitution insert_sub(const Substitution &sigma, const VarName &x,
                        const Substitution &tau, const InsertionResult &res);

/// The same combination without checking σ(x); used for cones that only
/// commute up to definitional equality.
Substitution combine_sub(const Substitution &sigma, const Substitution &tau,
                         const InsertionResult &res);

}  // namespace catt
