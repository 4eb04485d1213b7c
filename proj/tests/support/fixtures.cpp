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


#include "support/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace catt::testing {

Type arrow(const Context &ctx, const Term &x, const Term &y) {
  const Type *ty = x.is_var() ? ctx.find(x.name()) : nullptr;
  if (x.is_var() && ty == nullptr) throw std::runtime_error("arrow: unknown " + x.name());
  Type base = x.is_var() ? *ty : apply(x.type(), x.sub());
  return Type::arr(x, base, y);
}

Term instantiate(const Context &ambient, const Context &head, const Type &type,
                 const std::vector<Term> &lm_args) {
  const auto lm = locally_maximal_vars(head);
  if (lm.size() != lm_args.size()) throw std::runtime_error("instantiate: arity");
  std::map<VarName, Term> value;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    const Type &ax = *head.find(lm[i]);
    value.emplace(lm[i], lm_args[i]);
    for (int k = 0; k < ax.dim(); ++k) {
      for (Sign eps : {Sign::Minus, Sign::Plus}) {
        value.emplace(type_boundary(ax, k, eps).name(),
                      term_boundary(ambient, lm_args[i], k, eps));
      }
    }
  }
  Substitution sub;
  for (const auto &e : head) sub.push_back(e.name, value.at(e.name));
  return Term::coh(head, type, sub);
}

Term unbiased_app(const Context &ambient, const Context &head,
                  const std::vector<Term> &lm_args) {
  return instantiate(ambient, head, unbiased_type(head), lm_args);
}

Context chain_ctx(int n, const std::string &prefix) {
  Context ctx;
  ctx.push_back(prefix + "x0", Type::star());
  for (int i = 1; i <= n; ++i) {
    const std::string s = prefix + "x" + std::to_string(i - 1);
    const std::string t = prefix + "x" + std::to_string(i);
    ctx.push_back(t, Type::star());
    ctx.push_back(prefix + "f" + std::to_string(i),
                  Type::arr(v(s), Type::star(), v(t)));
  }
  return ctx;
}

Term comp(const Context &ambient, const std::vector<Term> &cells) {
  return unbiased_app(ambient, chain_ctx(static_cast<int>(cells.size())), cells);
}

Context chain_ambient(int n) {
  Context ctx;
  ctx.push_back("o0", Type::star());
  for (int i = 1; i <= n; ++i) {
    const std::string s = "o" + std::to_string(i - 1);
    const std::string t = "o" + std::to_string(i);
    ctx.push_back(t, Type::star());
    ctx.push_back("c" + std::to_string(i), Type::arr(v(s), Type::star(), v(t)));
  }
  return ctx;
}

namespace {

BataninTree node(std::vector<VarName> labels, std::vector<BataninTree> branches) {
  return {std::move(labels), std::move(branches)};
}

}  // namespace

BataninTree example_delta_tree() {
  return node({"x", "y", "z"},
              {node({"f", "g", "h"}, {leaf("α"), leaf("β")}), leaf("k")});
}

BataninTree example_theta_tree() {
  return node({"x'", "y'"},
              {node({"f'", "g'", "h'"}, {leaf("α'"), leaf("β'")})});
}

Context example_delta() { return tree_to_ctx(example_delta_tree()); }
Context example_theta() { return tree_to_ctx(example_theta_tree()); }

Type example_delta_type() {
  const Context d = example_delta();
  // f·k and h·k as binary composites over the whiskering shape.
  const Term fk = comp(d, {v("f"), v("k")});
  const Term hk = comp(d, {v("h"), v("k")});
  return Type::arr(fk, arrow(d, v("x"), v("z")), hk);
}

namespace {

void bracket_rec(const Context &ambient, int lo, int hi, std::vector<Term> &out) {
  if (hi - lo == 1) {
    out.push_back(v("c" + std::to_string(hi)));
    return;
  }
  for (int mid = lo + 1; mid < hi; ++mid) {
    std::vector<Term> left, right;
    bracket_rec(ambient, lo, mid, left);
    bracket_rec(ambient, mid, hi, right);
    for (const auto &l : left) {
      for (const auto &r : right) out.push_back(comp(ambient, {l, r}));
    }
  }
}

}  // namespace

std::vector<Term> bracketings(const Context &ambient, int n) {
  std::vector<Term> out;
  bracket_rec(ambient, 0, n, out);
  return out;
}

Context ambient_globular() {
  Context g;
  auto add = [&](const std::string &name, const std::string &s, const std::string &t) {
    g.push_back(name, arrow(g, v(s), v(t)));
  };
  for (const char *o : {"a", "b", "c", "d"}) g.push_back(o, Type::star());
  add("p", "a", "b");
  add("p2", "a", "b");
  add("q", "b", "c");
  add("q2", "b", "c");
  add("r", "c", "d");
  add("m", "p", "p2");
  add("m2", "p", "p2");
  add("n", "q", "q2");
  add("w", "m", "m2");
  return g;
}

}  // namespace catt::testing
