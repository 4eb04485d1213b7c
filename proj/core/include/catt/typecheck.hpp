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


// Typing judgements for contexts, types, substitutions and terms.
//
// In Catt mode types are compared up to alpha-equivalence; in CattSa mode up
// to definitional equality, decided by normalization.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catt/reduction.hpp"
#include "catt/syntax.hpp"

namespace catt {

enum class Mode { Catt, CattSa };

std::string_view to_string(Mode mode);

enum class Judgement { Context, Type, Substitution, Term, WellFormedSub };

std::string_view to_string(Judgement j);

enum class Failure {
  None,
  UnknownVariable,
  DuplicateVariable,
  EndpointTypeMismatch,
  ArityMismatch,
  NotPasting,
  SupportViolation,
  TypeMismatch,
  GlobularityViolation,
  NotGlobular,
};

std::string_view to_string(Failure f);

struct TypingReport {
  Judgement kind = Judgement::Term;
  std::string subject;
  bool ok = false;
  std::optional<Type> type;         // inferred type, for term judgements
  std::vector<std::string> trace;   // rules applied, innermost first
  Failure failure = Failure::None;
  std::string message;
};

/// Raised internally and by infer_term; reports carry the same data.
class TypeError : public std::runtime_error {
 public:
  TypeError(Failure f, const std::string &msg) : std::runtime_error(msg), failure_(f) {}
  Failure failure() const { return failure_; }

 private:
  Failure failure_;
};

/// A checker instance memoizes validated coherence heads, so one instance
/// should not be shared between threads.
class Checker {
 public:
  explicit Checker(Mode mode = Mode::CattSa, ReductionOptions opts = {})
      : mode_(mode), opts_(opts) {}

  Mode mode() const { return mode_; }
  const ReductionOptions &options() const { return opts_; }

  bool equal(const Term &a, const Term &b) const;
  bool equal(const Type &a, const Type &b) const;

  TypingReport check_ctx(const Context &ctx);
  TypingReport check_type(const Context &ctx, const Type &a);
  /// Δ ⊢ σ : Γ.
  TypingReport check_sub(const Context &delta, const Substitution &sigma,
                         const Context &gamma);
  TypingReport check_term(const Context &ctx, const Term &t, const Type &a);
  TypingReport infer(const Context &ctx, const Term &t);
  /// The substituted head type, not normalized. Throws TypeError.
  Type infer_term(const Context &ctx, const Term &t);

  /// σ : Γ → Δ out of a globular Γ sends every variable to a well-typed term
  /// of the same dimension and commutes with sources and targets.
  TypingReport check_well_formed_sub(const Context &gamma,
                                     const Substitution &sigma,
                                     const Context &delta);

 private:
  void ctx_(const Context &ctx, std::vector<std::string> &trace);
  void type_(const Context &ctx, const Type &a, std::vector<std::string> &trace);
  void sub_(const Context &delta, const Substitution &sigma, const Context &gamma,
            std::vector<std::string> &trace);
  Type term_(const Context &ctx, const Term &t, std::vector<std::string> &trace);
  std::string head_(const Term &t, std::vector<std::string> &trace);

  Mode mode_;
  ReductionOptions opts_;
  std::map<std::string, std::string> heads_;  // canonical head ↦ rule
};

}  // namespace catt
