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


#include "catt/insertion.hpp"

#include <fmt/format.h>

#include <set>

#include "catt/pasting.hpp"

namespace catt {

int type_linear_height(const Type &a) {
  const int d = a.dim();
  for (int k = 0; k < d; ++k) {
    if (!type_boundary(a, k, Sign::Minus).is_var() ||
        !type_boundary(a, k, Sign::Plus).is_var()) {
      return k;
    }
  }
  return d;
}

namespace {

BataninTree rename_tree(const BataninTree &t,
                        const std::map<VarName, VarName> &ren) {
  BataninTree out;
  for (const auto &l : t.labels) out.labels.push_back(ren.at(l));
  for (const auto &b : t.branches) out.branches.push_back(rename_tree(b, ren));
  return out;
}

}  // namespace

InsertionResult insert_ctx(const InsertionProblem &prob) {
  InsertionResult res;
  res.problem = prob;

  const BataninTree s = ctx_to_tree(prob.outer);
  const BataninTree t = ctx_to_tree(prob.inner);
  res.path = branching_path(s, prob.x);
  const int bh = static_cast<int>(res.path.size()) - 1;

  const int dx = dim_term(prob.outer, Term::var(prob.x));
  if (prob.inner_type.dim() != dx) {
    throw CattError(ErrorKind::DimensionError,
                    fmt::format("inserting a {}-dimensional type at a "
                                "{}-dimensional variable",
                                prob.inner_type.dim(), dx));
  }
  if (type_linear_height(prob.inner_type) < bh) {
    throw CattError(ErrorKind::LinearHeightTooSmall,
                    fmt::format("type {} has linear height {} below {}",
                                to_string(prob.inner_type),
                                type_linear_height(prob.inner_type), bh));
  }

  // Freshen inner labels that collide with outer ones.
  std::set<VarName> taken;
  for (const auto &e : prob.outer) taken.insert(e.name);
  for (const auto &e : prob.inner) taken.insert(e.name);
  const VarSet outer_names = prob.outer.name_set();
  for (const auto &e : prob.inner) {
    VarName n = e.name;
    if (outer_names.contains(n)) {
      n = fresh_name(n, [&](const VarName &c) { return taken.contains(c); });
      taken.insert(n);
    }
    res.renaming.emplace(e.name, n);
  }

  const BataninTree ins = insert_tree(s, res.path, rename_tree(t, res.renaming));
  res.inserted = tree_to_ctx(ins);

  std::map<VarName, VarName> back;
  for (const auto &[from, to] : res.renaming) back.emplace(to, from);
  for (const auto &e : res.inserted) {
    auto it = back.find(e.name);
    if (it != back.end()) {
      res.origin.push_back({true, it->second});
    } else {
      res.origin.push_back({false, e.name});
    }
  }

  for (const auto &e : prob.inner) {
    res.iota.push_back(e.name, Term::var(res.renaming.at(e.name)));
  }

  // Erased outer labels, each identified with a boundary of x.
  const Term head = Term::coh(prob.inner, prob.inner_type, res.iota);
  std::map<VarName, Term> image;
  auto erase = [&](const VarName &y, int k, Sign eps) {
    image.emplace(y, term_boundary(res.inserted, head, k, eps));
  };
  const BataninTree *node = &s;
  int level = 0;
  for (std::size_t i = 0; i < res.path.size(); ++i, ++level) {
    const auto n = static_cast<std::size_t>(res.path[i]);
    if (node->is_leaf()) break;
    erase(node->labels[n], level, Sign::Minus);
    erase(node->labels[n + 1], level, Sign::Plus);
    node = &node->branches[n];
  }
  while (!node->is_leaf()) {
    erase(node->labels[0], level, Sign::Minus);
    erase(node->labels[1], level, Sign::Plus);
    node = &node->branches[0];
    ++level;
  }
  image.emplace(node->labels[0], head);

  for (const auto &e : prob.outer) {
    auto it = image.find(e.name);
    if (it != image.end()) {
      res.kappa.push_back(e.name, it->second);
      res.erased.push_back(e.name);
    } else {
      res.kappa.push_back(e.name, Term::var(e.name));
    }
  }
  return res;
}

Substitution combine_sub(const Substitution &sigma, const Substitution &tau,
                         const InsertionResult &res) {
  Substitution out;
  for (std::size_t i = 0; i < res.inserted.size(); ++i) {
    const Origin &o = res.origin[i];
    out.push_back(res.inserted[i].name,
                  o.from_inner ? tau.at(o.original) : sigma.at(o.original));
  }
  return out;
}

Substitution insert_sub(const Substitution &sigma, const VarName &x,
                        const Substitution &tau, const InsertionResult &res) {
  const Term &sx = sigma.at(x);
  const Term expected =
      Term::coh(res.problem.inner, res.problem.inner_type, tau);
  if (!alpha_eq(sx, expected)) {
    throw CattError(ErrorKind::HeadMismatch,
                    fmt::format("σ({}) = {} is not {}", x, to_string(sx),
                                to_string(expected)));
  }
  return combine_sub(sigma, tau, res);
}

}  // namespace catt
