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


#include "catt/pushout.hpp"

#include <fmt/format.h>

#include <map>
#include <set>

#include "catt/pasting.hpp"

namespace catt {

Substitution inner_disc_sub(const InsertionProblem &prob) {
  return to_disc_sub(prob.inner, Term::coh(prob.inner, prob.inner_type,
                                           identity_sub(prob.inner)));
}

namespace {

// Candidate images for the mediating map, one per definitional-equality
// class.
std::vector<Term> candidate_pool(const Cone &cone, const ReductionOptions &opts) {
  std::vector<Term> raw;
  for (const auto &e : cone.gamma) raw.push_back(Term::var(e.name));
  auto add_with_boundaries = [&](const Term &t) {
    raw.push_back(t);
    const int d = dim_term(cone.gamma, t);
    for (int k = 0; k < d; ++k) {
      raw.push_back(term_boundary(cone.gamma, t, k, Sign::Minus));
      raw.push_back(term_boundary(cone.gamma, t, k, Sign::Plus));
    }
  };
  for (const auto &e : cone.sigma) add_with_boundaries(e.term);
  for (const auto &e : cone.tau) add_with_boundaries(e.term);
  std::set<std::string> seen;
  std::vector<Term> pool;
  for (const auto &t : raw) {
    if (seen.insert(canonical_key(normalize(t, opts))).second) pool.push_back(t);
  }
  return pool;
}

struct Search {
  const InsertionResult &res;
  const Cone &cone;
  const ReductionOptions &opts;
  const std::vector<Term> &pool;
  // Equations pinning a variable of the inserted context directly.
  std::multimap<VarName, Term> pins;
  std::vector<SubEntry> current;
  std::vector<Substitution> solutions;

  void run(std::size_t i) {
    if (i == res.inserted.size()) {
      Substitution mu{current};
      for (const auto &y : res.erased) {
        if (!def_eq(apply(res.kappa.at(y), mu), cone.sigma.at(y), opts)) return;
      }
      solutions.push_back(std::move(mu));
      return;
    }
    const VarName &v = res.inserted[i].name;
    auto [lo, hi] = pins.equal_range(v);
    for (const auto &cand : pool) {
      bool ok = true;
      for (auto it = lo; it != hi && ok; ++it) ok = def_eq(cand, it->second, opts);
      if (!ok) continue;
      current.push_back({v, cand});
      run(i + 1);
      current.pop_back();
    }
  }
};

}  // namespace

PushoutReport check_pushout(const InsertionProblem &prob,
                            const InsertionResult &res,
                            const std::vector<Cone> &cones,
                            const ReductionOptions &opts) {
  PushoutReport rep;
  const Substitution xbar = to_disc_sub(prob.outer, Term::var(prob.x));
  const Substitution cbar = inner_disc_sub(prob);

  rep.square_commutes =
      def_eq(compose(xbar, res.kappa), compose(cbar, res.iota), opts);
  if (!rep.square_commutes) rep.failures.push_back("(a) square does not commute");

  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Cone &cone = cones[c];
    ConeReport cr;
    cr.commutes =
        def_eq(compose(xbar, cone.sigma), compose(cbar, cone.tau), opts);
    if (!cr.commutes) {
      rep.failures.push_back(fmt::format("cone {}: does not commute over D_n", c));
      rep.cones.push_back(std::move(cr));
      continue;
    }
    cr.mediator = combine_sub(cone.sigma, cone.tau, res);
    cr.factors = def_eq(compose(res.iota, cr.mediator), cone.tau, opts) &&
                 def_eq(compose(res.kappa, cr.mediator), cone.sigma, opts);
    if (!cr.factors) {
      rep.failures.push_back(fmt::format("cone {}: (b) mediator does not factor", c));
    }

    const std::vector<Term> pool = candidate_pool(cone, opts);
    Search search{res, cone, opts, pool, {}, {}, {}};
    for (const auto &e : res.iota) search.pins.emplace(e.term.name(), cone.tau.at(e.name));
    for (const auto &e : res.kappa) {
      if (e.term.is_var()) search.pins.emplace(e.term.name(), cone.sigma.at(e.name));
    }
    search.run(0);
    cr.solutions = search.solutions.size();
    cr.unique = cr.solutions == 1 &&
                def_eq(search.solutions.front(), cr.mediator, opts);
    if (!cr.unique) {
      rep.failures.push_back(fmt::format(
          "cone {}: (c) {} factorizations found", c, cr.solutions));
    }
    rep.cones.push_back(std::move(cr));
  }
  return rep;
}

}  // namespace catt
