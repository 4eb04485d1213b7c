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

// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catt/insertion.hpp"
#include "catt/ordinal.hpp"
#include "catt/pasting.hpp"
#include "catt/pushout.hpp"
#include "catt/reduction.hpp"
#include "catt/surface.hpp"
#include "catt/tree.hpp"
#include "catt/typecheck.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace catt;
using namespace catt::testing;
namespace fs = std::filesystem;

namespace {

// Time limits, in seconds.
constexpr double kFidelitySecs = 1.0;
constexpr double kRoundTripSecs = 30.0;
constexpr double kAssocSecs = 10.0;
constexpr double kConfluenceSecs = 60.0;
constexpr double kJudgementSecs = 1.0;

// Sizes.
constexpr int kRoundTripLabels = 7;
constexpr int kRandomTerms = 500;
constexpr int kRandomMaxDim = 3;
constexpr int kMinCones = 3;
constexpr int kMinCorpus = 20;
constexpr int kGlobularCells = 6;
constexpr int kGlobularTargetCells = 4;  // exhaustive variable-valued targets
constexpr std::size_t kCompositeSubsPerCtx = 200;
constexpr int kEqPairs = 200;
constexpr std::size_t kGraphBudget = 4000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int n, const std::string &title, const std::function<Outcome()> &body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, fmt::format("exception: {}", e.what())};
  }
  if (!o.pass) ++failures;
  fmt::print("[{}] {}. {} ({:.2f} s): {}\n", o.pass ? "PASS" : "FAIL", n, title, since(t0),
             o.detail);
  std::fflush(stdout);
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus(const std::string &sub) {
  std::vector<fs::path> out;
  for (const auto &e : fs::directory_iterator(fs::path(CATT_CORPUS_DIR) / sub)) {
    if (e.path().extension() == ".catt") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void collect_terms(const Type &a, std::vector<Term> &out) {
  if (a.is_star()) return;
  collect_terms(a.base(), out);
  out.push_back(a.src());
  out.push_back(a.tgt());
}

// Every coherence term of the valid corpus: bodies and the terms in types.
std::vector<Term> corpus_terms() {
  std::vector<Term> out;
  std::set<std::string> seen;
  for (const auto &p : corpus("valid")) {
    Checker checker;
    Environment env;
    check_file(parse(slurp(p)), checker, env);
    for (const auto &e : env.entries()) {
      std::vector<Term> ts{e.term};
      collect_terms(e.type, ts);
      for (const auto &t : ts) {
        if (t.is_coh() && seen.insert(canonical_key(t)).second) out.push_back(t);
      }
    }
  }
  return out;
}

struct Sample {
  Context ctx;
  Term term;
};

// Distinct well-typed coherence terms of dimension ≤ 3 from several pools.
std::vector<Sample> random_terms(int count) {
  std::vector<Sample> out;
  std::set<std::string> seen;
  const std::vector<Context> ambients{ambient_globular(), chain_ambient(4), example_delta()};
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count && seed < 200; ++seed) {
    TermPool pool(ambients[seed % ambients.size()], head_library(7), seed, 6);
    pool.grow(300);
    for (const auto &e : pool.entries()) {
      if (!e.term.is_coh() || e.dim > kRandomMaxDim) continue;
      if (!seen.insert(canonical_key(e.term)).second) continue;
      out.push_back({pool.ambient(), e.term});
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

const std::vector<Sample> &random_sample() {
  static const std::vector<Sample> s = random_terms(kRandomTerms);
  return s;
}

// Explores the reduction graph from t, calling f on every step.
template <typename F>
std::size_t explore(const Term &t, F f) {
  std::set<std::string> seen;
  std::vector<Term> todo{t};
  while (!todo.empty() && seen.size() < kGraphBudget) {
    Term cur = todo.back();
    todo.pop_back();
    if (!seen.insert(canonical_key(cur)).second) continue;
    for (auto &s : step_candidates(cur)) {
      f(cur, s);
      todo.push_back(s.result);
    }
  }
  return seen.size();
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::vector<std::string> bad;
  const InsertionResult r2 =
      insert_ctx({example_delta(), "α", example_theta(), unbiased_type(example_theta())});
  if (render(ctx_to_tree(r2.inserted)) != "[x' [f' [α'] g' [β'] h' [β] h] y' [k] z]") {
    bad.push_back("nested tree");
  }
  if (r2.inserted.names() !=
      std::vector<VarName>{"x'", "y'", "f'", "g'", "α'", "h'", "β'", "h", "β", "z", "k"}) {
    bad.push_back("nested context");
  }
  const Term head = Term::coh(example_theta(), unbiased_type(example_theta()), r2.iota);
  const std::vector<std::pair<VarName, Term>> table = {
      {"x", v("x'")}, {"y", v("y'")}, {"z", v("z")}, {"f", v("f'")}, {"g", v("h'")},
      {"h", v("h")},  {"k", v("k")},  {"α", head},   {"β", v("β")}};
  for (const auto &[from, to] : table) {
    if (!alpha_eq(r2.kappa.at(from), to)) bad.push_back("κ(" + from + ")");
  }
  const Context c2p = chain_ctx(2, "p");
  const InsertionResult r1 =
      insert_ctx({c2p, "pf2", chain_ctx(2), unbiased_type(chain_ctx(2))});
  if (render(ctx_to_tree(r1.inserted)) != "[px0 [pf1] x0 [f1] x1 [f2] x2]") {
    bad.push_back("binary tree");
  }
  const double secs = since(t0);
  if (secs >= kFidelitySecs) bad.push_back(fmt::format("took {:.2f} s", secs));
  if (!bad.empty()) return {false, "mismatch: " + fmt::format("{}", fmt::join(bad, ", "))};
  return {true, "nested insertion context and 9-entry κ table, binary-into-binary ternary tree match"};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  int n = 0, bad = 0;
  for (const auto &t : enumerate_trees(kRoundTripLabels)) {
    ++n;
    const Context g = tree_to_ctx(t);
    if (!(ctx_to_tree(g) == t)) ++bad;
    if (to_string(tree_to_ctx(ctx_to_tree(g))) != to_string(g)) ++bad;
  }
  const double secs = since(t0);
  const bool pass = bad == 0 && n == 9 && secs < kRoundTripSecs;
  return {pass, fmt::format("{} trees with ≤ {} labels, {} mismatches", n, kRoundTripLabels, bad)};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  Checker catt(Mode::Catt);
  std::vector<std::string> bad;
  std::vector<std::size_t> counts;
  const std::map<int, std::size_t> catalan{{3, 2}, {4, 5}, {5, 14}};
  for (int n = 3; n <= 5; ++n) {
    const Context amb = chain_ambient(n);
    std::vector<Term> cells;
    for (int i = 1; i <= n; ++i) cells.push_back(v("c" + std::to_string(i)));
    const Term flat = comp(amb, cells);
    const auto bs = bracketings(amb, n);
    counts.push_back(bs.size());
    if (bs.size() != catalan.at(n)) bad.push_back(fmt::format("n={}: {} bracketings", n, bs.size()));
    std::set<std::string> nfs;
    for (const auto &t : bs) {
      const Term nf = normalize(t);
      nfs.insert(canonical_key(nf));
      if (!alpha_eq(nf, flat)) bad.push_back(fmt::format("n={}: NF not the {}-ary composite", n, n));
    }
    if (nfs.size() != 1) bad.push_back(fmt::format("n={}: {} distinct normal forms", n, nfs.size()));
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        if (catt.equal(bs[i], bs[j])) bad.push_back(fmt::format("n={}: Catt identifies {},{}", n, i, j));
      }
    }
  }
  const double secs = since(t0);
  if (secs >= kAssocSecs) bad.push_back(fmt::format("took {:.2f} s", secs));
  if (!bad.empty()) return {false, bad.front()};
  return {true, fmt::format("{} bracketings, one normal form each n; pairwise distinct in Catt",
                            fmt::join(counts, "/"))};
}

// The coherence a redex position points at.
Term at_position(const Term &t, const std::vector<std::string> &pos) {
  Term cur = t;
  Type ty;
  bool in_type = false;
  for (const auto &seg : pos) {
    if (seg.starts_with("σ.")) {
      cur = cur.sub().at(seg.substr(std::string("σ.").size()));
    } else if (seg == "ty") {
      ty = cur.type();
      in_type = true;
    } else if (seg == "base") {
      ty = ty.base();
    } else {
      cur = seg == "src" ? ty.src() : ty.tgt();
      in_type = false;
    }
  }
  if (in_type) throw std::logic_error("position ends in a type");
  return cur;
}

Outcome criterion4() {
  std::size_t steps = 0, violations = 0, lower_dim = 0, outer_disc = 0;
  std::string first;
  auto check = [&](const Term &from, const TermStep &s) {
    ++steps;
    const Ordinal a = syntactic_depth(from), b = syntactic_depth(s.result);
    if (b < a) return;
    // Split violations by the shape of the outer coherence: a disc head, or
    // an inserted argument of lower dimension than the head's type.
    const Term outer = at_position(from, s.redex.position);
    if (is_disc(outer.ctx())) ++outer_disc;
    if (dim(s.redex.detail.inner) < outer.type().dim()) ++lower_dim;
    if (violations++ == 0) {
      first = fmt::format("{} step at {}: sd {} → {}", to_string(s.redex.rule),
                          render_position(s.redex.position), to_string(a), to_string(b));
    }
  };
  const auto cterms = corpus_terms();
  for (const auto &t : cterms) explore(t, check);
  const auto &rs = random_sample();
  for (const auto &s : rs) explore(s.term, check);
  std::string detail = fmt::format("{} steps from {} corpus + {} random terms, {} violations",
                                   steps, cterms.size(), rs.size(), violations);
  if (violations > 0) {
    detail += fmt::format(" ({} into a disc head, {} below the head's dimension); first: {}",
                          outer_disc, lower_dim, first);
  }
  const bool pass = violations == 0 && static_cast<int>(rs.size()) == kRandomTerms;
  return {pass, detail};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  std::size_t forks = 0, pairs = 0, bad = 0, truncated = 0;
  std::string first;
  const auto terms = corpus_terms();
  for (const auto &t : terms) {
    const auto steps = step_candidates(t);
    if (steps.size() < 2) continue;
    ++forks;
    const Term nf = normalize(t);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        ++pairs;
        if (!alpha_eq(normalize(steps[i].result), normalize(steps[j].result))) {
          if (bad++ == 0) first = to_string(t);
        }
      }
    }
    std::set<std::string> normal;
    const std::size_t nodes = explore(t, [&](const Term &, const TermStep &s) {
      if (step_candidates(s.result).empty()) normal.insert(canonical_key(s.result));
    });
    if (nodes >= kGraphBudget) ++truncated;
    if (normal != std::set<std::string>{canonical_key(nf)}) {
      if (bad++ == 0) first = to_string(t);
    }
  }
  const double secs = since(t0);
  std::string detail = fmt::format("{} corpus terms with ≥ 2 reducts, {} reduct pairs, {} violations",
                                   forks, pairs, bad);
  if (truncated > 0) detail += fmt::format(", {} graphs truncated", truncated);
  if (bad > 0) detail += "; first: " + first;
  return {bad == 0 && truncated == 0 && forks > 0 && secs < kConfluenceSecs, detail};
}

Outcome criterion6() {
  std::vector<std::string> parts;
  bool pass = true;
  const std::vector<std::pair<std::string, InsertionProblem>> problems{
      {"binary", {chain_ctx(2, "p"), "pf2", chain_ctx(2), unbiased_type(chain_ctx(2))}},
      {"nested", {example_delta(), "α", example_theta(), unbiased_type(example_theta())}}};
  for (const auto &[name, p] : problems) {
    const InsertionResult r = insert_ctx(p);
    const auto cones = generate_cones(r, 7, kMinCones + 1);
    const PushoutReport rep = check_pushout(p, r, cones);
    std::size_t unique = 0;
    for (const auto &c : rep.cones) unique += c.commutes && c.factors && c.unique;
    const bool ok = rep.ok() && rep.square_commutes && static_cast<int>(cones.size()) >= kMinCones &&
                    unique == cones.size();
    pass = pass && ok;
    parts.push_back(fmt::format("{}: square {}, {}/{} cones factor uniquely", name,
                                rep.square_commutes ? "commutes" : "fails", unique, cones.size()));
  }
  return {pass, fmt::format("{}", fmt::join(parts, "; "))};
}

Outcome criterion7() {
  int valid = 0, invalid = 0, wrong = 0;
  double slowest = 0;
  std::string first;
  for (const auto *sub : {"valid", "invalid"}) {
    for (const auto &p : corpus(sub)) {
      const SourceFile f = parse(slurp(p));
      Checker checker;
      Environment env;
      for (const auto &d : f.decls) {
        const auto t0 = Clock::now();
        const auto out = check_file(SourceFile{{d}}, checker, env);
        slowest = std::max(slowest, since(t0));
        const bool want = !d.name.starts_with("bad_");
        (want ? valid : invalid)++;
        if (out.size() != 1 || out[0].ok != want) {
          if (wrong++ == 0) first = d.name;
        }
      }
    }
  }
  std::string detail =
      fmt::format("{} valid, {} invalid declarations, {} misjudged, slowest {:.3f} s", valid,
                  invalid, wrong, slowest);
  if (wrong > 0) detail += "; first: " + first;
  return {wrong == 0 && valid >= kMinCorpus && invalid >= kMinCorpus && slowest < kJudgementSecs,
          detail};
}

Outcome criterion8() {
  Checker sa(Mode::CattSa);
  std::size_t total = 0, typed = 0, mismatches = 0;
  std::string first;
  auto test = [&](const Context &gamma, const Substitution &s, const Context &delta) {
    ++total;
    const bool a = sa.check_sub(delta, s, gamma).ok;
    const bool b = sa.check_well_formed_sub(gamma, s, delta).ok;
    typed += a;
    if (a != b && mismatches++ == 0) first = to_string(gamma) + " " + to_string(s);
  };
  const auto sources = enumerate_globular(kGlobularCells);
  const auto targets = enumerate_globular(kGlobularTargetCells);
  std::mt19937_64 rng(8);
  // Every variable-valued substitution into small targets.
  for (const auto &delta : targets) {
    if (delta.empty()) continue;
    TermPool vars(delta, {}, 0);
    for (const auto &gamma : sources) {
      if (gamma.empty()) continue;
      for (const auto &s : enumerate_subs(gamma, vars.entries(), SIZE_MAX, rng)) {
        test(gamma, s, delta);
      }
    }
  }
  const std::size_t var_total = total;
  // Composite-valued substitutions into larger ambients.
  for (const auto &amb : {ambient_globular(), chain_ambient(4)}) {
    TermPool pool(amb, head_library(5), 8, 4);
    pool.grow(300);
    for (const auto &gamma : sources) {
      if (gamma.empty()) continue;
      for (const auto &s : enumerate_subs(gamma, pool.entries(), kCompositeSubsPerCtx, rng)) {
        test(gamma, s, amb);
      }
    }
  }
  std::string detail = fmt::format(
      "{} sources ≤ {} cells; {} variable-valued subs into all targets ≤ {} cells, {} "
      "composite-valued; {} well-typed; {} disagreements",
      sources.size() - 1, kGlobularCells, var_total, kGlobularTargetCells, total - var_total,
      typed, mismatches);
  if (mismatches > 0) detail += "; first: " + first;
  return {mismatches == 0, detail};
}

Outcome criterion9() {
  Checker sa(Mode::CattSa);
  std::mt19937_64 rng(9);
  int pairs = 0, bad = 0;
  std::string first;
  for (const auto &[ctx, t] : random_sample()) {
    if (pairs >= kEqPairs) break;
    const auto steps = step_candidates(t);
    if (steps.empty()) continue;
    std::vector<Term> partners{normalize(t)};
    partners.push_back(steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)].result);
    for (const auto &u : partners) {
      if (pairs >= kEqPairs) break;
      if (!def_eq(t, u)) continue;
      ++pairs;
      const TypingReport a = sa.infer(ctx, t), b = sa.infer(ctx, u);
      const bool ok = a.ok && b.ok && def_eq(*a.type, *b.type) && sa.check_term(ctx, t, *b.type).ok &&
                      sa.check_term(ctx, u, *a.type).ok;
      if (!ok && bad++ == 0) first = to_string(t);
    }
  }
  std::string detail = fmt::format("{} distinct def_eq pairs, {} violations", pairs, bad);
  if (bad > 0) detail += "; first: " + first;
  return {bad == 0 && pairs >= kEqPairs, detail};
}

}  // namespace

int main() {
  report(1, "worked-example fidelity", criterion1);
  report(2, "tree round trip", criterion2);
  report(3, "associativity collapse", criterion3);
  report(4, "termination measure", criterion4);
  report(5, "confluence", criterion5);
  report(6, "pushout property", criterion6);
  report(7, "typechecker corpus", criterion7);
  report(8, "well-formedness equivalence", criterion8);
  report(9, "equality/typing coherence", criterion9);
  fmt::print("{} of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
