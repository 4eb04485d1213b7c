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


// Labelled Batanin trees and their correspondence with pasting contexts.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catt/syntax.hpp"

namespace catt {

/// A tree with labels l_0 … l_k and branches b_0 … b_{k-1}; branch b_i is
/// suspended between labels l_i and l_{i+1}.
struct BataninTree {
  std::vector<VarName> labels;
  std::vector<BataninTree> branches;

  bool is_leaf() const { return branches.empty(); }
  friend bool operator==(const BataninTree &, const BataninTree &) = default;
};

using TreePath = std::vector<int>;

/// Leaf with a single label.
BataninTree leaf(VarName label);

/// Checks |labels| = |branches| + 1 everywhere and global label uniqueness.
/// Throws InvalidTree.
void validate(const BataninTree &t);

/// ⌊T⌋.
Context tree_to_ctx(const BataninTree &t);
/// ⌈Γ⌉. Throws NotPasting.
BataninTree ctx_to_tree(const Context &ctx);

int linear_height(const BataninTree &t);
/// Number of nested levels (a leaf has depth 0); equals dim ⌊T⌋.
int depth(const BataninTree &t);
/// At most one branch at every level.
bool is_linear(const BataninTree &t);

/// Every label, in the order of ⌊T⌋.
std::vector<VarName> all_labels(const BataninTree &t);
/// Labels of leaf subtrees, in the order of ⌊T⌋.
std::vector<VarName> leaf_labels(const BataninTree &t);

/// Throws NotLocallyMaximal unless `x` labels a leaf of `t`.
TreePath branching_path(const BataninTree &t, const VarName &x);
inline int branching_height(const BataninTree &t, const VarName &x) {
  return static_cast<int>(branching_path(t, x).size()) - 1;
}

bool path_valid(const BataninTree &t, const TreePath &p);

/// S ▷_p T. Throws PathInvalid or LinearHeightTooSmall.
BataninTree insert_tree(const BataninTree &s, const TreePath &p,
                        const BataninTree &t);

/// Bracket notation, e.g. "[x [f [α] g [β] h] y [k] z]".
std::string render(const BataninTree &t);
/// Inverse of render. Throws SyntaxError.
BataninTree parse_tree(std::string_view text);

std::string to_string(const TreePath &p);

}  // namespace catt
