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


// One-step reduction, innermost-leftmost normalization and definitional
// equality for the strictly associative theory.
//
// Reduction never consults an ambient context: variables are opaque and the
// redex side-conditions only inspect coherence heads. The overloads taking a
// Context additionally reject terms that mention undeclared variables.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "catt/syntax.hpp"

namespace catt {

enum class RuleKind {
  Insertion,
  CellReduction,
  ArgumentReduction,
  TypeComponent,
  SubComponent,
};

std::string_view to_string(RuleKind rule);

struct InsertionDetail {
  VarName x;            // the locally maximal variable of the outer head
  Context inner;        // Θ
  Substitution tau;     // arguments of the inner coherence
};

/// `position` is a path of segments from the root: "σ.<var>" enters an
/// argument, "ty" the type of a coherence, "src"/"base"/"tgt" an arrow.
/// `rule` is the outermost rule; the contracted redex is always an insertion
/// whose data sits in `detail`.
struct Redex {
  RuleKind rule;
  std::vector<std::string> position;
  InsertionDetail detail;
};

std::string render_position(const std::vector<std::string> &position);

struct ReductionOptions {
  bool allow_disc_insertion = true;
};

struct TermStep {
  Redex redex;
  Term result;
};
struct TypeStep {
  Redex redex;
  Type result;
};
struct SubStep {
  Redex redex;
  Substitution result;
};

/// Every one-step reduct.
std::vector<TermStep> step_candidates(const Term &t, const ReductionOptions &opts = {});
std::vector<TypeStep> step_candidates(const Type &a, const ReductionOptions &opts = {});
std::vector<SubStep> step_candidates(const Substitution &s,
                                     const ReductionOptions &opts = {});
std::vector<TermStep> step_candidates(const Context &ctx, const Term &t,
                                      const ReductionOptions &opts = {});

/// Insertions available at the head of `t` only, in the order of the head
/// context's locally maximal variables.
std::vector<TermStep> head_insertions(const Term &t, const ReductionOptions &opts = {});

/// The first step the normalizer takes, if any.
std::optional<TermStep> innermost_step(const Term &t, const ReductionOptions &opts = {});

Term normalize(const Term &t, const ReductionOptions &opts = {});
Type normalize(const Type &a, const ReductionOptions &opts = {});
Substitution normalize(const Substitution &s, const ReductionOptions &opts = {});
Term normalize(const Context &ctx, const Term &t, const ReductionOptions &opts = {});

struct TraceStep {
  Redex redex;
  Term before;
  Term after;
};

/// Repeated innermost steps; the final `after` (or `t` itself when the
/// trace is empty) is normalize(t).
std::vector<TraceStep> normalize_trace(const Term &t, const ReductionOptions &opts = {});

/// "<rule> at <position>: <before> ⇝ <after>".
std::string to_string(const TraceStep &step);

bool def_eq(const Term &a, const Term &b, const ReductionOptions &opts = {});
bool def_eq(const Type &a, const Type &b, const ReductionOptions &opts = {});
bool def_eq(const Substitution &a, const Substitution &b,
            const ReductionOptions &opts = {});
bool def_eq(const Context &ctx, const Term &a, const Term &b,
            const ReductionOptions &opts = {});
bool def_eq(const Context &ctx, const Type &a, const Type &b,
            const ReductionOptions &opts = {});

/// a =_n b.
bool eq_at_level(const Context &ctx, const Term &a, const Term &b, int n,
                 const ReductionOptions &opts = {});
bool eq_at_level(const Context &ctx, const Type &a, const Type &b, int n,
                 const ReductionOptions &opts = {});
bool eq_at_level(const Context &ctx, const Substitution &a,
                 const Substitution &b, int n, const ReductionOptions &opts = {});

inline constexpr int kInfiniteHeight = std::numeric_limits<int>::max();

struct Regularity {
  bool regular = false;
  int height = 0;  // kInfiniteHeight for variables
};

Regularity regularity(const Context &ctx, const Term &t);
inline bool is_regular(const Context &ctx, const Term &t) {
  return regularity(ctx, t).regular;
}
/// The regular height; std::nullopt when t is not regular.
std::optional<int> regular_height(const Context &ctx, const Term &t);

}  // namespace catt
