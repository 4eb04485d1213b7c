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


#include "catt/reduction.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "catt/insertion.hpp"
#include "catt/pasting.hpp"
#include "catt/tree.hpp"

namespace catt {

std::string_view to_string(RuleKind rule) {
  switch (rule) {
    case RuleKind::Insertion: return "insertion";
    case RuleKind::CellReduction: return "cell";
    case RuleKind::ArgumentReduction: return "argument";
    case RuleKind::TypeComponent: return "type";
    case RuleKind::SubComponent: return "substitution";
  }
  return "?";
}

std::string render_position(const std::vector<std::string> &position) {
  if (position.empty()) return "ε";
  return fmt::format("{}", fmt::join(position, "/"));
}

namespace {

void require_scoped(const Context &ctx, const VarSet &fv) {
  for (const auto &v : fv) {
    if (!ctx.contains(v)) {
      throw CattError(ErrorKind::IllTyped,
                      fmt::format("variable '{}' is not in scope", v));
    }
  }
}

std::string arg_segment(const VarName &x) { return "σ." + x; }

template <typename Step>
Step nest(Step step, RuleKind rule, const std::string &segment) {
  step.redex.rule = rule;
  step.redex.position.insert(step.redex.position.begin(), segment);
  return step;
}

// Collects head insertions; stops after the first when `first_only`.
std::vector<TermStep> head_steps(const Term &t, const ReductionOptions &opts,
                                 bool first_only) {
  std::vector<TermStep> out;
  if (t.is_var()) return out;
  const Context &delta = t.ctx();
  if (!is_pasting(delta)) return out;
  std::optional<BataninTree> outer_tree;
  for (const auto &x : locally_maximal_vars(delta)) {
    const Term *sx = t.sub().find(x);
    if (sx == nullptr || !sx->is_coh() || !is_unbiased(*sx)) continue;
    const Context &theta = sx->ctx();
    if (!opts.allow_disc_insertion && is_disc(theta)) continue;
    if (!outer_tree) outer_tree = ctx_to_tree(delta);
    const int bh = branching_height(*outer_tree, x);
    if (bh > linear_height(ctx_to_tree(theta))) continue;

    InsertionResult res;
    try {
      res = insert_ctx({delta, x, theta, sx->type()});
    } catch (const CattError &e) {
      if (e.kind() != ErrorKind::DimensionError) throw;
      throw CattError(ErrorKind::IllTyped, e.what());
    }
    Term result = Term::coh(res.inserted, apply(t.type(), res.kappa),
                            insert_sub(t.sub(), x, sx->sub(), res));
    out.push_back({Redex{RuleKind::Insertion, {}, {x, theta, sx->sub()}},
                   std::move(result)});
    if (first_only) break;
  }
  return out;
}

}  // namespace

std::vector<TermStep> head_insertions(const Term &t, const ReductionOptions &opts) {
  return head_steps(t, opts, false);
}

std::vector<TermStep> step_candidates(const Term &t, const ReductionOptions &opts) {
  std::vector<TermStep> out;
  if (t.is_var()) return out;
  for (std::size_t i = 0; i < t.sub().size(); ++i) {
    const SubEntry &e = t.sub()[i];
    for (auto &c : step_candidates(e.term, opts)) {
      Term r = Term::coh(t.ctx(), t.type(), t.sub().with(i, c.result));
      out.push_back(nest(TermStep{std::move(c.redex), std::move(r)},
                         RuleKind::ArgumentReduction, arg_segment(e.name)));
    }
  }
  for (auto &c : step_candidates(t.type(), opts)) {
    Term r = Term::coh(t.ctx(), c.result, t.sub());
    out.push_back(nest(TermStep{std::move(c.redex), std::move(r)},
                       RuleKind::CellReduction, "ty"));
  }
  for (auto &h : head_steps(t, opts, false)) out.push_back(std::move(h));
  return out;
}

std::vector<TypeStep> step_candidates(const Type &a, const ReductionOptions &opts) {
  std::vector<TypeStep> out;
  if (a.is_star()) return out;
  for (auto &c : step_candidates(a.src(), opts)) {
    out.push_back(nest(TypeStep{std::move(c.redex),
                                Type::arr(c.result, a.base(), a.tgt())},
                       RuleKind::TypeComponent, "src"));
  }
  for (auto &c : step_candidates(a.base(), opts)) {
    out.push_back(nest(TypeStep{std::move(c.redex),
                                Type::arr(a.src(), c.result, a.tgt())},
                       RuleKind::TypeComponent, "base"));
  }
  for (auto &c : step_candidates(a.tgt(), opts)) {
    out.push_back(nest(TypeStep{std::move(c.redex),
                                Type::arr(a.src(), a.base(), c.result)},
                       RuleKind::TypeComponent, "tgt"));
  }
  return out;
}

std::vector<SubStep> step_candidates(const Substitution &s,
                                     const ReductionOptions &opts) {
  std::vector<SubStep> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (auto &c : step_candidates(s[i].term, opts)) {
      out.push_back(nest(SubStep{std::move(c.redex), s.with(i, c.result)},
                         RuleKind::SubComponent, arg_segment(s[i].name)));
    }
  }
  return out;
}

std::vector<TermStep> step_candidates(const Context &ctx, const Term &t,
                                      const ReductionOptions &opts) {
  require_scoped(ctx, free_vars(t));
  return step_candidates(t, opts);
}

namespace {

std::optional<TermStep> innermost_term(const Term &t, const ReductionOptions &opts);

std::optional<TypeStep> innermost_type(const Type &a, const ReductionOptions &opts) {
  if (a.is_star()) return std::nullopt;
  if (auto c = innermost_term(a.src(), opts)) {
    return nest(TypeStep{std::move(c->redex), Type::arr(c->result, a.base(), a.tgt())},
                RuleKind::TypeComponent, "src");
  }
  if (auto c = innermost_type(a.base(), opts)) {
    return nest(TypeStep{std::move(c->redex), Type::arr(a.src(), c->result, a.tgt())},
                RuleKind::TypeComponent, "base");
  }
  if (auto c = innermost_term(a.tgt(), opts)) {
    return nest(TypeStep{std::move(c->redex), Type::arr(a.src(), a.base(), c->result)},
                RuleKind::TypeComponent, "tgt");
  }
  return std::nullopt;
}

std::optional<TermStep> innermost_term(const Term &t, const ReductionOptions &opts) {
  if (t.is_var()) return std::nullopt;
  for (std::size_t i = 0; i < t.sub().size(); ++i) {
    const SubEntry &e = t.sub()[i];
    if (auto c = innermost_term(e.term, opts)) {
      Term r = Term::coh(t.ctx(), t.type(), t.sub().with(i, c->result));
      return nest(TermStep{std::move(c->redex), std::move(r)},
                  RuleKind::ArgumentReduction, arg_segment(e.name));
    }
  }
  if (auto c = innermost_type(t.type(), opts)) {
    return nest(TermStep{std::move(c->redex), Term::coh(t.ctx(), c->result, t.sub())},
                RuleKind::CellReduction, "ty");
  }
  auto heads = head_steps(t, opts, true);
  if (heads.empty()) return std::nullopt;
  return std::move(heads.front());
}

}  // namespace

std::optional<TermStep> innermost_step(const Term &t, const ReductionOptions &opts) {
  return innermost_term(t, opts);
}

Term normalize(const Term &t, const ReductionOptions &opts) {
  if (t.is_var()) return t;
  Term u = Term::coh(t.ctx(), normalize(t.type(), opts), normalize(t.sub(), opts));
  for (;;) {
    auto heads = head_steps(u, opts, true);
    if (heads.empty()) return u;
    // The new arguments are drawn from normal forms; only the transported
    // type can contain fresh redexes.
    const Term &r = heads.front().result;
    u = Term::coh(r.ctx(), normalize(r.type(), opts), r.sub());
  }
}

Type normalize(const Type &a, const ReductionOptions &opts) {
  if (a.is_star()) return a;
  return Type::arr(normalize(a.src(), opts), normalize(a.base(), opts),
                   normalize(a.tgt(), opts));
}

Substitution normalize(const Substitution &s, const ReductionOptions &opts) {
  std::vector<SubEntry> out;
  out.reserve(s.size());
  for (const auto &e : s) out.push_back({e.name, normalize(e.term, opts)});
  return Substitution(std::move(out));
}

Term normalize(const Context &ctx, const Term &t, const ReductionOptions &opts) {
  require_scoped(ctx, free_vars(t));
  return normalize(t, opts);
}

std::vector<TraceStep> normalize_trace(const Term &t, const ReductionOptions &opts) {
  std::vector<TraceStep> out;
  Term cur = t;
  while (auto s = innermost_step(cur, opts)) {
    out.push_back({s->redex, cur, s->result});
    cur = s->result;
  }
  return out;
}

std::string to_string(const TraceStep &step) {
  return fmt::format("{} at {}: {} ⇝ {}", to_string(step.redex.rule),
                     render_position(step.redex.position), to_string(step.before),
                     to_string(step.after));
}

bool def_eq(const Term &a, const Term &b, const ReductionOptions &opts) {
  return alpha_eq(a, b) || alpha_eq(normalize(a, opts), normalize(b, opts));
}

bool def_eq(const Type &a, const Type &b, const ReductionOptions &opts) {
  return alpha_eq(a, b) || alpha_eq(normalize(a, opts), normalize(b, opts));
}

bool def_eq(const Substitution &a, const Substitution &b,
            const ReductionOptions &opts) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !def_eq(a[i].term, b[i].term, opts)) {
      return false;
    }
  }
  return true;
}

bool def_eq(const Context &ctx, const Term &a, const Term &b,
            const ReductionOptions &opts) {
  require_scoped(ctx, free_vars(a));
  require_scoped(ctx, free_vars(b));
  return def_eq(a, b, opts);
}

bool def_eq(const Context &ctx, const Type &a, const Type &b,
            const ReductionOptions &opts) {
  require_scoped(ctx, free_vars(a));
  require_scoped(ctx, free_vars(b));
  return def_eq(a, b, opts);
}

bool eq_at_level(const Context &ctx, const Term &a, const Term &b, int n,
                 const ReductionOptions &opts) {
  require_scoped(ctx, free_vars(a));
  require_scoped(ctx, free_vars(b));
  const int da = dim_term(ctx, a);
  const int db = dim_term(ctx, b);
  if (da < n && db < n) return def_eq(a, b, opts);
  if (da < n) return false;
  if (a.is_var()) return b.is_var() && a.name() == b.name();
  if (!b.is_coh() || !alpha_eq(a.ctx(), b.ctx())) return false;
  // Express b's head type over a's binder names.
  const Type b_type = apply(b.type(), renaming(b.ctx().names(), a.ctx().names()));
  return eq_at_level(a.ctx(), a.type(), b_type, n, opts) &&
         eq_at_level(ctx, a.sub(), b.sub(), n, opts);
}

bool eq_at_level(const Context &ctx, const Type &a, const Type &b, int n,
                 const ReductionOptions &opts) {
  if (a.is_star() || b.is_star()) return a.is_star() && b.is_star();
  return eq_at_level(ctx, a.src(), b.src(), n, opts) &&
         eq_at_level(ctx, a.tgt(), b.tgt(), n, opts) &&
         eq_at_level(ctx, a.base(), b.base(), n, opts);
}

bool eq_at_level(const Context &ctx, const Substitution &a,
                 const Substitution &b, int n, const ReductionOptions &opts) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq_at_level(ctx, a[i].term, b[i].term, n, opts)) return false;
  }
  return true;
}

Regularity regularity(const Context &ctx, const Term &t) {
  require_scoped(ctx, free_vars(t));
  if (t.is_var()) return {true, kInfiniteHeight};
  const Context &delta = t.ctx();
  if (!is_pasting(delta) || is_disc(delta)) return {};
  if (!alpha_eq(t.type(), unbiased_type(delta))) return {};
  const BataninTree tree = ctx_to_tree(delta);
  for (const auto &e : t.sub()) {
    if (!regularity(ctx, e.term).regular) return {};
  }
  for (const auto &x : locally_maximal_vars(delta)) {
    const Term *sx = t.sub().find(x);
    if (sx == nullptr) return {};
    if (!(branching_height(tree, x) < regularity(ctx, *sx).height)) return {};
  }
  return {true, linear_height(tree)};
}

std::optional<int> regular_height(const Context &ctx, const Term &t) {
  Regularity r = regularity(ctx, t);
  if (!r.regular) return std::nullopt;
  return r.height;
}

}  // namespace catt
