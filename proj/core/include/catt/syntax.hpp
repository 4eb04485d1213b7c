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

// Raw syntax of contexts, substitutions, types and terms.
//
// All four sorts are immutable values. Terms and types share their
// sub-structure through reference-counted nodes, so copying is cheap and
// values may be handed between threads freely.
//
// A coherence `Coh Γ A σ` binds the variables of Γ inside A; σ is keyed by the
// variables of Γ (in order) and its terms live in the ambient context. Heads
// are closed, so substitution never needs to rename.

#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "catt/error.hpp"

namespace catt {

using VarName = std::string;
using VarSet = std::set<VarName>;

enum class Sign { Minus, Plus };

inline char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

class Term;
class Type;
class Context;
class Substitution;
struct TermNode;
struct TypeNode;

class Term {
 public:
  static Term var(VarName name);
  static Term coh(Context ctx, Type type, Substitution sub);

  bool is_var() const;
  bool is_coh() const { return !is_var(); }

  const VarName &name() const;
  const Context &ctx() const;
  const Type &type() const;
  const Substitution &sub() const;

  /// Identity of the shared node; equal pointers imply syntactic equality.
  const TermNode *node() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

class Type {
 public:
  /// The base type ⋆.
  Type() = default;
  static Type star() { return Type(); }
  static Type arr(Term src, Type base, Term tgt);

  bool is_star() const { return node_ == nullptr; }
  const Term &src() const;
  const Type &base() const;
  const Term &tgt() const;

  int dim() const;

  const TypeNode *node() const { return node_.get(); }

 private:
  explicit Type(std::shared_ptr<const TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct CtxEntry {
  VarName name;
  Type type;
};

/// Ordered variable declarations. Names are pairwise distinct; scoping of the
/// declared types is checked by the typechecker, not here.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<CtxEntry> entries);
  explicit Context(std::vector<CtxEntry> entries);

  /// Throws DuplicateVariable if `name` is already declared.
  void push_back(VarName name, Type type);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CtxEntry &operator[](std::size_t i) const { return entries_[i]; }
  const CtxEntry &back() const { return entries_.back(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<CtxEntry> &entries() const { return entries_; }

  const Type *find(const VarName &name) const;
  bool contains(const VarName &name) const { return find(name) != nullptr; }
  /// Position of `name`, or size() if absent.
  std::size_t index_of(const VarName &name) const;

  std::vector<VarName> names() const;
  VarSet name_set() const;

  /// The first `n` entries.
  Context prefix(std::size_t n) const;

 private:
  std::vector<CtxEntry> entries_;
};

struct SubEntry {
  VarName name;
  Term term;
};

/// Ordered association from the variables of a source context to terms.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<SubEntry> entries);
  explicit Substitution(std::vector<SubEntry> entries);

  /// Throws DuplicateVariable if `name` is already mapped.
  void push_back(VarName name, Term term);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const SubEntry &operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<SubEntry> &entries() const { return entries_; }

  const Term *find(const VarName &name) const;
  /// Throws Undefined if `name` is not mapped.
  const Term &at(const VarName &name) const;

  /// Copy with the term at position `i` replaced.
  Substitution with(std::size_t i, Term term) const;

 private:
  std::vector<SubEntry> entries_;
};

struct TermNode {
  bool is_var;
  VarName name;
  Context ctx;
  Type type;
  Substitution sub;
};

struct TypeNode {
  Term src;
  Type base;
  Term tgt;
  int dim;
};

inline bool Term::is_var() const { return node_->is_var; }
inline const VarName &Term::name() const { return node_->name; }
inline const Context &Term::ctx() const { return node_->ctx; }
inline const Type &Term::type() const { return node_->type; }
inline const Substitution &Term::sub() const { return node_->sub; }

inline const Term &Type::src() const { return node_->src; }
inline const Type &Type::base() const { return node_->base; }
inline const Term &Type::tgt() const { return node_->tgt; }
inline int Type::dim() const { return node_ ? node_->dim : 0; }

// Convenience constructors used throughout the tests and the elaborator.
inline Term var(VarName name) { return Term::var(std::move(name)); }
inline Type star() { return Type::star(); }
inline Type arr(Term src, Type base, Term tgt) {
  return Type::arr(std::move(src), std::move(base), std::move(tgt));
}

// ---------------------------------------------------------------------------
// Support and dimension.

VarSet support(const Context &ctx, const Term &t);
VarSet support(const Context &ctx, const Type &a);
VarSet support(const Context &ctx, const Substitution &s);

int dim(const Type &a);
/// dim(∅) = −1; otherwise the largest dimension of a declared type.
int dim(const Context &ctx);
int dim_term(const Context &ctx, const Term &t);

/// Free variables, without unfolding declared types.
VarSet free_vars(const Term &t);
VarSet free_vars(const Type &a);

// ---------------------------------------------------------------------------
// Substitution.

/// Throws Undefined when a variable is not mapped by `s`.
Term apply(const Term &t, const Substitution &s);
Type apply(const Type &a, const Substitution &s);
/// `compose(tau, sigma)` keeps tau's domain and applies sigma to its terms.
Substitution compose(const Substitution &tau, const Substitution &sigma);

Substitution identity_sub(const Context &ctx);
/// Variable-to-variable renaming keyed by the domain of `from`.
Substitution renaming(const std::vector<VarName> &from,
                      const std::vector<VarName> &to);

// ---------------------------------------------------------------------------
// Boundaries.

/// A^ε_m. Throws DimensionError unless m < dim(A).
Term type_boundary(const Type &a, int m, Sign eps);
/// δ^ε_n(t). Throws DimensionError unless n ≤ dim(t).
Term term_boundary(const Context &ctx, const Term &t, int n, Sign eps);

// ---------------------------------------------------------------------------
// Equality.

/// Pointer-or-structural identity with names compared literally.
bool syntactic_eq(const Term &a, const Term &b);
bool syntactic_eq(const Type &a, const Type &b);

/// Equality up to consistent renaming of bound (head) variables. Free
/// variables are compared by name; context binders compare positionally.
bool alpha_eq(const Term &a, const Term &b);
bool alpha_eq(const Type &a, const Type &b);
bool alpha_eq(const Context &a, const Context &b);
bool alpha_eq(const Substitution &a, const Substitution &b);

/// A string that is equal for two values iff they are alpha-equivalent.
std::string canonical_key(const Term &t);
std::string canonical_key(const Type &a);
std::string canonical_key(const Substitution &s);

// ---------------------------------------------------------------------------
// Names and printing.

/// Appends primes to `base` until `taken` rejects it no longer.
VarName fresh_name(const VarName &base,
                   const std::function<bool(const VarName &)> &taken);

std::string to_string(const Term &t);
std::string to_string(const Type &a);
std::string to_string(const Context &ctx);
std::string to_string(const Substitution &s);

}  // namespace catt
