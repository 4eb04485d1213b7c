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


#include "catt/pasting.hpp"

#include <fmt/format.h>

namespace catt {

std::string_view to_string(PdRule rule) {
  switch (rule) {
    case PdRule::Start: return "⋆";
    case PdRule::Up: return "⇑";
    case PdRule::Down: return "⇓";
    case PdRule::Done: return "✓";
  }
  return "?";
}

namespace {

[[noreturn]] void not_pasting(std::size_t pos, const std::string &why) {
  throw CattError(ErrorKind::NotPasting,
                  fmt::format("not a pasting context at entry {}: {}", pos, why));
}

}  // namespace

PdDerivation check_pd(const Context &ctx) {
  PdDerivation d;
  if (ctx.empty()) not_pasting(0, "empty context");
  if (!ctx[0].type.is_star()) not_pasting(0, "first variable must be a 0-cell");
  VarName cur = ctx[0].name;
  Type cur_ty = ctx[0].type;
  d.steps.push_back({PdRule::Start, cur, cur_ty, {}});

  auto down = [&] {
    const Type &ty = cur_ty;
    cur = ty.tgt().name();
    Type base = ty.base();
    cur_ty = base;
    d.steps.push_back({PdRule::Down, cur, cur_ty, {}});
  };

  std::size_t i = 1;
  while (i < ctx.size()) {
    if (i + 1 >= ctx.size()) not_pasting(i, "dangling variable without a cell");
    const CtxEntry &y = ctx[i];
    const CtxEntry &f = ctx[i + 1];
    if (y.type.dim() > cur_ty.dim()) not_pasting(i, "dimension jumps up");
    while (cur_ty.dim() > y.type.dim()) down();
    if (!syntactic_eq(y.type, cur_ty)) {
      not_pasting(i, fmt::format("expected type {}", to_string(cur_ty)));
    }
    Type expected = Type::arr(Term::var(cur), cur_ty, Term::var(y.name));
    if (!syntactic_eq(f.type, expected)) {
      not_pasting(i + 1, fmt::format("expected type {}", to_string(expected)));
    }
    cur = f.name;
    cur_ty = expected;
    d.steps.push_back({PdRule::Up, f.name, expected, y.name});
    i += 2;
  }
  while (!cur_ty.is_star()) down();
  d.steps.push_back({PdRule::Done, cur, cur_ty, {}});
  return d;
}

bool is_pasting(const Context &ctx) {
  try {
    check_pd(ctx);
    return true;
  } catch (const CattError &) {
    return false;
  }
}

Context replay(const PdDerivation &d) {
  Context out;
  VarName cur;
  Type cur_ty;
  for (const auto &s : d.steps) {
    switch (s.rule) {
      case PdRule::Start:
        out.push_back(s.term, Type::star());
        cur = s.term;
        cur_ty = Type::star();
        break;
      case PdRule::Up: {
        out.push_back(s.target, cur_ty);
        Type ty = Type::arr(Term::var(cur), cur_ty, Term::var(s.target));
        out.push_back(s.term, ty);
        cur = s.term;
        cur_ty = ty;
        break;
      }
      case PdRule::Down:
        cur = cur_ty.tgt().name();
        cur_ty = Type(cur_ty.base());
        break;
      case PdRule::Done:
        break;
    }
  }
  return out;
}

namespace {

std::vector<CtxEntry> boundary_entries(const std::vector<CtxEntry> &es,
                                       std::size_t n, Sign eps) {
  if (n <= 1) return {};
  const CtxEntry &y = es[n - 2];
  const CtxEntry &f = es[n - 1];
  int dp = -1;
  for (std::size_t i = 0; i + 2 < n; ++i) dp = std::max(dp, es[i].type.dim());
  const int da = y.type.dim() + 1;
  std::vector<CtxEntry> out;
  if (da < dp) {
    out = boundary_entries(es, n - 2, eps);
    out.push_back(y);
    out.push_back(f);
  } else if (da == dp) {
    out = boundary_entries(es, n - 2, eps);
    if (eps == Sign::Plus) {
      out.pop_back();
      out.push_back(y);
    }
  } else {
    out.assign(es.begin(), es.begin() + static_cast<std::ptrdiff_t>(n - 2));
    if (eps == Sign::Plus) {
      out.pop_back();
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace

Context boundary_ctx(const Context &ctx, Sign eps) {
  check_pd(ctx);
  if (dim(ctx) < 1) {
    throw CattError(ErrorKind::DimensionError,
                    "boundary of a 0-dimensional pasting context");
  }
  return Context(boundary_entries(ctx.entries(), ctx.size(), eps));
}

std::vector<VarName> locally_maximal_vars(const Context &ctx) {
  VarSet used;
  for (const auto &e : ctx) {
    VarSet fv = free_vars(e.type);
    used.insert(fv.begin(), fv.end());
  }
  std::vector<VarName> out;
  for (const auto &e : ctx) {
    if (!used.contains(e.name)) out.push_back(e.name);
  }
  return out;
}

VarSet locally_maximal(const Context &ctx) {
  check_pd(ctx);
  auto v = locally_maximal_vars(ctx);
  return VarSet(v.begin(), v.end());
}

bool is_disc(const Context &ctx) {
  return is_pasting(ctx) && locally_maximal_vars(ctx).size() == 1;
}

VarName disc_var(int k, Sign eps) {
  return fmt::format("d{}{}", eps == Sign::Minus ? 'm' : 'p', k);
}

DiscContext disc_context(int n) {
  if (n < 0) throw CattError(ErrorKind::DimensionError, "negative disc dimension");
  Context ctx;
  ctx.push_back(disc_var(0, Sign::Minus), Type::star());
  Type top = Type::star();
  for (int k = 0; k < n; ++k) {
    ctx.push_back(disc_var(k, Sign::Plus), top);
    top = Type::arr(Term::var(disc_var(k, Sign::Minus)), top,
                    Term::var(disc_var(k, Sign::Plus)));
    ctx.push_back(disc_var(k + 1, Sign::Minus), top);
  }
  return {n, std::move(ctx)};
}

Substitution to_disc_sub(const Context &ctx, const Term &t) {
  const int n = dim_term(ctx, t);
  Substitution out;
  for (int k = 0; k < n; ++k) {
    out.push_back(disc_var(k, Sign::Minus), term_boundary(ctx, t, k, Sign::Minus));
    out.push_back(disc_var(k, Sign::Plus), term_boundary(ctx, t, k, Sign::Plus));
  }
  out.push_back(disc_var(n, Sign::Minus), t);
  return out;
}

namespace {

struct Unbiased {
  Term term;
  Type type;
};

Unbiased unbiased(const Context &ctx) {
  auto lm = locally_maximal_vars(ctx);
  if (lm.size() == 1) {
    // A disc: its sole locally maximal variable is the top cell.
    return {Term::var(lm.front()), *ctx.find(lm.front())};
  }
  Unbiased src = unbiased(boundary_ctx(ctx, Sign::Minus));
  Unbiased tgt = unbiased(boundary_ctx(ctx, Sign::Plus));
  Type ty = Type::arr(src.term, src.type, tgt.term);
  return {Term::coh(ctx, ty, identity_sub(ctx)), ty};
}

}  // namespace

Type unbiased_type(const Context &ctx) {
  check_pd(ctx);
  return unbiased(ctx).type;
}

Term unbiased_term(const Context &ctx) {
  check_pd(ctx);
  return unbiased(ctx).term;
}

bool is_unbiased(const Term &t) {
  if (!t.is_coh() || !is_pasting(t.ctx())) return false;
  return alpha_eq(t.type(), unbiased(t.ctx()).type);
}

}  // namespace catt
