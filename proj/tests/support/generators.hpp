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


// Enumerators and random generators for property tests.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catt/pushout.hpp"
#include "catt/reduction.hpp"
#include "catt/syntax.hpp"
#include "catt/tree.hpp"
#include "catt/typecheck.hpp"

namespace catt::testing {

/// Every tree shape with between 1 and `max_labels` labels, labelled
/// v0, v1, … in context order.
std::vector<BataninTree> enumerate_trees(int max_labels);

/// Relabels a tree's labels in context order with `prefix` + index.
BataninTree relabel(const BataninTree &t, const std::string &prefix);

/// Globular contexts with at most `max_cells` variables, one per
/// isomorphism-respecting construction order: each new cell is a 0-cell or
/// an arrow between two existing parallel cells (source index ≤ target
/// index is not assumed, so loops and both orientations occur).
std::vector<Context> enumerate_globular(int max_cells);

struct Head {
  std::string name;
  Context ctx;
  Type type;
};

/// Unbiased composites over every non-disc pasting shape with at most
/// `max_labels` labels, plus identities, associators and unitors.
std::vector<Head> head_library(int max_labels = 6);

struct PoolEntry {
  Term term;
  Type type;
  int dim;
  std::vector<std::string> boundary_keys;  // (k,−),(k,+) for k < dim
  int size;                                // number of coherence nodes
};

/// A growing pool of well-typed terms over a fixed ambient context. Terms
/// are built by instantiating library heads with pool members whose
/// boundaries agree up to normal form; each candidate is then checked.
class TermPool {
 public:
  TermPool(Context ambient, std::vector<Head> heads, std::uint64_t seed,
           int max_size = 6, ReductionOptions opts = {});

  const Context &ambient() const { return ambient_; }
  const std::vector<PoolEntry> &entries() const { return entries_; }

  /// Attempts `attempts` random instantiations; returns how many were added.
  int grow(int attempts);
  /// A random coherence term of dimension ≤ max_dim from the pool.
  std::optional<Term> random_coh(int max_dim);
  /// Instantiates one head with random arguments; nullopt on failure.
  std::optional<Term> try_instantiate(const Head &h);

  std::mt19937_64 &rng() { return rng_; }

 private:
  PoolEntry make_entry(const Term &t, const Type &ty) const;

  Context ambient_;
  std::vector<Head> heads_;
  std::mt19937_64 rng_;
  int max_size_;
  ReductionOptions opts_;
  Checker checker_;
  std::vector<PoolEntry> entries_;
};

int coh_count(const Term &t);

/// Cones over an insertion square: the identity cone (ι, κ) first, then
/// `count - 1` cones κ∘ρ, ι∘ρ for random well-typed ρ out of the inserted
/// context into a renamed copy of it.
/// Substitutions out of Γ whose entries are drawn from `cands` with matching
/// dimension, type-blind so both well- and ill-typed ones appear. All of them
/// when there are at most `cap`, otherwise `cap` random ones.
std::vector<Substitution> enumerate_subs(const Context &gamma,
                                         const std::vector<PoolEntry> &cands,
                                         std::size_t cap, std::mt19937_64 &rng);

std::vector<Cone> generate_cones(const InsertionResult &res, std::uint64_t seed,
                                 int count);

}  // namespace catt::testing
