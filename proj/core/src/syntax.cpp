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

#include "catt/syntax.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace catt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::NotPasting: return "NotPasting";
    case ErrorKind::NotLocallyMaximal: return "NotLocallyMaximal";
    case ErrorKind::PathInvalid: return "PathInvalid";
    case ErrorKind::LinearHeightTooSmall: return "LinearHeightTooSmall";
    case ErrorKind::HeadMismatch: return "HeadMismatch";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidTree: return "InvalidTree";
  }
  return "Unknown";
}

Term Term::var(VarName name) {
  auto node = std::make_shared<TermNode>();
  node->is_var = true;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::coh(Context ctx, Type type, Substitution sub) {
  auto node = std::make_shared<TermNode>();
  node->is_var = false;
  node->ctx = std::move(ctx);
  node->type = std::move(type);
  node->sub = std::move(sub);
  return Term(std::move(node));
}

Type Type::arr(Term src, Type base, Term tgt) {
  auto node = std::make_shared<TypeNode>(
      TypeNode{std::move(src), std::move(base), std::move(tgt), 0});
  node->dim = node->base.dim() + 1;
  return Type(std::move(node));
}

// ---------------------------------------------------------------------------
// Context and Substitution containers.

Context::Context(std::initializer_list<CtxEntry> entries) {
  for (const auto &e : entries) push_back(e.name, e.type);
}

Context::Context(std::vector<CtxEntry> entries) {
  entries_.reserve(entries.size());
  for (auto &e : entries) push_back(std::move(e.name), std::move(e.type));
}

void Context::push_back(VarName name, Type type) {
  if (contains(name)) {
    throw CattError(ErrorKind::DuplicateVariable,
                    fmt::format("variable '{}' declared twice", name));
  }
  entries_.push_back({std::move(name), std::move(type)});
}

const Type *Context::find(const VarName &name) const {
  for (const auto &e : entries_) {
    if (e.name == name) return &e.type;
  }
  return nullptr;
}

std::size_t Context::index_of(const VarName &name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return entries_.size();
}

std::vector<VarName> Context::names() const {
  std::vector<VarName> out;
  out.reserve(entries_.size());
  for (const auto &e : entries_) out.push_back(e.name);
  return out;
}

VarSet Context::name_set() const {
  VarSet out;
  for (const auto &e : entries_) out.insert(e.name);
  return out;
}

Context Context::prefix(std::size_t n) const {
  Context out;
  out.entries_.assign(entries_.begin(),
                      entries_.begin() + static_cast<std::ptrdiff_t>(
                                             std::min(n, entries_.size())));
  return out;
}

Substitution::Substitution(std::initializer_list<SubEntry> entries) {
  for (const auto &e : entries) push_back(e.name, e.term);
}

Substitution::Substitution(std::vector<SubEntry> entries) {
  entries_.reserve(entries.size());
  for (auto &e : entries) push_back(std::move(e.name), std::move(e.term));
}

void Substitution::push_back(VarName name, Term term) {
  if (find(name) != nullptr) {
    throw CattError(ErrorKind::DuplicateVariable,
                    fmt::format("variable '{}' mapped twice", name));
  }
  entries_.push_back({std::move(name), std::move(term)});
}

const Term *Substitution::find(const VarName &name) const {
  for (const auto &e : entries_) {
    if (e.name == name) return &e.term;
  }
  return nullptr;
}

const Term &Substitution::at(const VarName &name) const {
  if (const Term *t = find(name)) return *t;
  throw CattError(ErrorKind::Undefined,
                  fmt::format("substitution does not map '{}'", name));
}

Substitution Substitution::with(std::size_t i, Term term) const {
  Substitution out = *this;
  out.entries_[i].term = std::move(term);
  return out;
}

// ---------------------------------------------------------------------------
// Support and dimension.

namespace {

const Type &declared_type(const Context &ctx, const VarName &name) {
  if (const Type *ty = ctx.find(name)) return *ty;
  throw CattError(ErrorKind::UnknownVariable,
                  fmt::format("unknown variable '{}'", name));
}

void add_support(const Context &ctx, const Term &t, VarSet &out);

void add_support(const Context &ctx, const Type &a, VarSet &out) {
  if (a.is_star()) return;
  add_support(ctx, a.src(), out);
  add_support(ctx, a.tgt(), out);
}

void add_support(const Context &ctx, const Term &t, VarSet &out) {
  if (t.is_var()) {
    const Type &ty = declared_type(ctx, t.name());
    if (out.insert(t.name()).second) add_support(ctx, ty, out);
    return;
  }
  for (const auto &e : t.sub()) add_support(ctx, e.term, out);
}

void add_free_vars(const Term &t, VarSet &out);

void add_free_vars(const Type &a, VarSet &out) {
  if (a.is_star()) return;
  add_free_vars(a.src(), out);
  add_free_vars(a.base(), out);
  add_free_vars(a.tgt(), out);
}

void add_free_vars(const Term &t, VarSet &out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto &e : t.sub()) add_free_vars(e.term, out);
}

}  // namespace

VarSet support(const Context &ctx, const Term &t) {
  VarSet out;
  add_support(ctx, t, out);
  return out;
}

VarSet support(const Context &ctx, const Type &a) {
  VarSet out;
  add_support(ctx, a, out);
  return out;
}

VarSet support(const Context &ctx, const Substitution &s) {
  VarSet out;
  for (const auto &e : s) add_support(ctx, e.term, out);
  return out;
}

VarSet free_vars(const Term &t) {
  VarSet out;
  add_free_vars(t, out);
  return out;
}

VarSet free_vars(const Type &a) {
  VarSet out;
  add_free_vars(a, out);
  return out;
}

int dim(const Type &a) { return a.dim(); }

int dim(const Context &ctx) {
  int d = -1;
  for (const auto &e : ctx) d = std::max(d, e.type.dim());
  return d;
}

int dim_term(const Context &ctx, const Term &t) {
  if (t.is_var()) return declared_type(ctx, t.name()).dim();
  return t.type().dim();
}

// ---------------------------------------------------------------------------
// Substitution.

Term apply(const Term &t, const Substitution &s) {
  if (t.is_var()) return s.at(t.name());
  return Term::coh(t.ctx(), t.type(), compose(t.sub(), s));
}

Type apply(const Type &a, const Substitution &s) {
  if (a.is_star()) return a;
  return Type::arr(apply(a.src(), s), apply(a.base(), s), apply(a.tgt(), s));
}

Substitution compose(const Substitution &tau, const Substitution &sigma) {
  std::vector<SubEntry> out;
  out.reserve(tau.size());
  for (const auto &e : tau) out.push_back({e.name, apply(e.term, sigma)});
  return Substitution(std::move(out));
}

Substitution identity_sub(const Context &ctx) {
  std::vector<SubEntry> out;
  out.reserve(ctx.size());
  for (const auto &e : ctx) out.push_back({e.name, Term::var(e.name)});
  return Substitution(std::move(out));
}

Substitution renaming(const std::vector<VarName> &from,
                      const std::vector<VarName> &to) {
  std::vector<SubEntry> out;
  out.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    out.push_back({from[i], Term::var(to.at(i))});
  }
  return Substitution(std::move(out));
}

// ---------------------------------------------------------------------------
// Boundaries.

Term type_boundary(const Type &a, int m, Sign eps) {
  if (m < 0 || m >= a.dim()) {
    throw CattError(ErrorKind::DimensionError,
                    fmt::format("boundary {} of a type of dimension {}", m,
                                a.dim()));
  }
  const Type *cur = &a;
  while (cur->dim() - 1 > m) cur = &cur->base();
  return eps == Sign::Minus ? cur->src() : cur->tgt();
}

Term term_boundary(const Context &ctx, const Term &t, int n, Sign eps) {
  const int d = dim_term(ctx, t);
  if (n < 0 || n > d) {
    throw CattError(ErrorKind::DimensionError,
                    fmt::format("boundary {} of a term of dimension {}", n, d));
  }
  if (n == d) return t;
  if (t.is_var()) return type_boundary(declared_type(ctx, t.name()), n, eps);
  return apply(type_boundary(t.type(), n, eps), t.sub());
}

// ---------------------------------------------------------------------------
// Equality.

bool syntactic_eq(const Type &a, const Type &b);

bool syntactic_eq(const Term &a, const Term &b) {
  if (a.node() == b.node()) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.name() == b.name();
  const Context &ca = a.ctx();
  const Context &cb = b.ctx();
  if (ca.size() != cb.size() || a.sub().size() != b.sub().size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].name != cb[i].name || !syntactic_eq(ca[i].type, cb[i].type)) {
      return false;
    }
  }
  if (!syntactic_eq(a.type(), b.type())) return false;
  for (std::size_t i = 0; i < a.sub().size(); ++i) {
    if (a.sub()[i].name != b.sub()[i].name ||
        !syntactic_eq(a.sub()[i].term, b.sub()[i].term)) {
      return false;
    }
  }
  return true;
}

bool syntactic_eq(const Type &a, const Type &b) {
  if (a.node() == b.node()) return true;
  if (a.is_star() || b.is_star()) return false;
  return a.dim() == b.dim() && syntactic_eq(a.src(), b.src()) &&
         syntactic_eq(a.tgt(), b.tgt()) && syntactic_eq(a.base(), b.base());
}

namespace {

// Binder positions of the innermost enclosing head on each side. `aligned`
// records that both sides bind exactly the same names, which makes shared
// nodes interchangeable.
struct Scope {
  std::unordered_map<VarName, std::size_t> left;
  std::unordered_map<VarName, std::size_t> right;
  bool aligned = true;
};

bool alpha_term(const Term &a, const Term &b, const Scope &sc);

bool alpha_type(const Type &a, const Type &b, const Scope &sc) {
  if (sc.aligned && a.node() == b.node()) return true;
  if (a.is_star() || b.is_star()) return a.is_star() && b.is_star();
  return a.dim() == b.dim() && alpha_term(a.src(), b.src(), sc) &&
         alpha_term(a.tgt(), b.tgt(), sc) && alpha_type(a.base(), b.base(), sc);
}

// Compares two contexts positionally, filling `inner` with their binders.
bool alpha_binders(const Context &ca, const Context &cb, Scope &inner) {
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!alpha_type(ca[i].type, cb[i].type, inner)) return false;
    inner.left.emplace(ca[i].name, i);
    inner.right.emplace(cb[i].name, i);
    if (ca[i].name != cb[i].name) inner.aligned = false;
  }
  return true;
}

bool alpha_term(const Term &a, const Term &b, const Scope &sc) {
  if (sc.aligned && a.node() == b.node()) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto li = sc.left.find(a.name());
    auto ri = sc.right.find(b.name());
    if (li == sc.left.end() && ri == sc.right.end()) return a.name() == b.name();
    if (li == sc.left.end() || ri == sc.right.end()) return false;
    return li->second == ri->second;
  }
  if (a.sub().size() != b.sub().size()) return false;
  Scope inner;
  if (!alpha_binders(a.ctx(), b.ctx(), inner)) return false;
  if (!alpha_type(a.type(), b.type(), inner)) return false;
  for (std::size_t i = 0; i < a.sub().size(); ++i) {
    if (!alpha_term(a.sub()[i].term, b.sub()[i].term, sc)) return false;
  }
  return true;
}

const Scope &top_scope() {
  static const Scope scope;
  return scope;
}

using Binders = std::unordered_map<VarName, std::size_t>;

void key_term(const Term &t, const Binders *bound, std::string &out);

void key_type(const Type &a, const Binders *bound, std::string &out) {
  if (a.is_star()) {
    out += '*';
    return;
  }
  out += '(';
  key_term(a.src(), bound, out);
  out += '>';
  key_type(a.base(), bound, out);
  out += '>';
  key_term(a.tgt(), bound, out);
  out += ')';
}

void key_term(const Term &t, const Binders *bound, std::string &out) {
  if (t.is_var()) {
    if (bound != nullptr) {
      auto it = bound->find(t.name());
      if (it != bound->end()) {
        out += '#';
        out += std::to_string(it->second);
        return;
      }
    }
    out += '$';
    out += t.name();
    out += ';';
    return;
  }
  Binders inner;
  out += "C[";
  for (std::size_t i = 0; i < t.ctx().size(); ++i) {
    key_type(t.ctx()[i].type, &inner, out);
    out += ',';
    inner.emplace(t.ctx()[i].name, i);
  }
  out += ':';
  key_type(t.type(), &inner, out);
  out += "](";
  for (const auto &e : t.sub()) {
    key_term(e.term, bound, out);
    out += ',';
  }
  out += ')';
}

}  // namespace

bool alpha_eq(const Term &a, const Term &b) {
  return alpha_term(a, b, top_scope());
}

bool alpha_eq(const Type &a, const Type &b) {
  return alpha_type(a, b, top_scope());
}

bool alpha_eq(const Context &a, const Context &b) {
  Scope inner;
  return alpha_binders(a, b, inner);
}

bool alpha_eq(const Substitution &a, const Substitution &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !alpha_eq(a[i].term, b[i].term)) return false;
  }
  return true;
}

std::string canonical_key(const Term &t) {
  std::string out;
  key_term(t, nullptr, out);
  return out;
}

std::string canonical_key(const Type &a) {
  std::string out;
  key_type(a, nullptr, out);
  return out;
}

std::string canonical_key(const Substitution &s) {
  std::string out;
  for (const auto &e : s) {
    out += e.name;
    out += '=';
    key_term(e.term, nullptr, out);
    out += ',';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Names and printing.

VarName fresh_name(const VarName &base,
                   const std::function<bool(const VarName &)> &taken) {
  VarName name = base;
  while (taken(name)) name += '\'';
  return name;
}

namespace {

void print_term(const Term &t, std::string &out);

void print_type(const Type &a, std::string &out) {
  if (a.is_star()) {
    out += '*';
    return;
  }
  print_term(a.src(), out);
  out += " -> ";
  print_term(a.tgt(), out);
}

void print_ctx(const Context &ctx, std::string &out) {
  bool first = true;
  for (const auto &e : ctx) {
    if (!first) out += ' ';
    first = false;
    out += '(';
    out += e.name;
    out += " : ";
    print_type(e.type, out);
    out += ')';
  }
}

void print_term(const Term &t, std::string &out) {
  if (t.is_var()) {
    out += t.name();
    return;
  }
  out += "coh{";
  print_ctx(t.ctx(), out);
  out += " : ";
  print_type(t.type(), out);
  out += "}[";
  bool first = true;
  for (const auto &e : t.sub()) {
    if (!first) out += ", ";
    first = false;
    print_term(e.term, out);
  }
  out += ']';
}

}  // namespace

std::string to_string(const Term &t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Type &a) {
  std::string out;
  print_type(a, out);
  return out;
}

std::string to_string(const Context &ctx) {
  std::string out;
  print_ctx(ctx, out);
  return out;
}

std::string to_string(const Substitution &s) {
  std::string out = "⟨";
  bool first = true;
  for (const auto &e : s) {
    if (!first) out += ", ";
    first = false;
    out += e.name;
    out += " ↦ ";
    print_term(e.term, out);
  }
  out += "⟩";
  return out;
}

}  // namespace catt
