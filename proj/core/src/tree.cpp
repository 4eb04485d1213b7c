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


#include "catt/tree.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cctype>
#include <set>

#include "catt/pasting.hpp"

namespace catt {

BataninTree leaf(VarName label) { return {{std::move(label)}, {}}; }

namespace {

void validate_rec(const BataninTree &t, std::set<VarName> &seen) {
  if (t.labels.size() != t.branches.size() + 1) {
    throw CattError(ErrorKind::InvalidTree,
                    fmt::format("node with {} labels and {} branches",
                                t.labels.size(), t.branches.size()));
  }
  for (const auto &l : t.labels) {
    if (!seen.insert(l).second) {
      throw CattError(ErrorKind::InvalidTree,
                      fmt::format("label '{}' occurs twice", l));
    }
  }
  for (const auto &b : t.branches) validate_rec(b, seen);
}

void emit(const BataninTree &t, const Type &a, Context &out) {
  out.push_back(t.labels[0], a);
  for (std::size_t i = 0; i < t.branches.size(); ++i) {
    out.push_back(t.labels[i + 1], a);
    emit(t.branches[i], Type::arr(Term::var(t.labels[i]), a,
                                  Term::var(t.labels[i + 1])),
         out);
  }
}

BataninTree parse_level(const Context &ctx, std::size_t &pos, const Type &a) {
  if (pos >= ctx.size() || !syntactic_eq(ctx[pos].type, a)) {
    throw CattError(ErrorKind::NotPasting,
                    fmt::format("unexpected entry at position {}", pos));
  }
  BataninTree t;
  t.labels.push_back(ctx[pos++].name);
  while (pos < ctx.size() && syntactic_eq(ctx[pos].type, a)) {
    t.labels.push_back(ctx[pos++].name);
    const auto n = t.labels.size();
    t.branches.push_back(parse_level(
        ctx, pos,
        Type::arr(Term::var(t.labels[n - 2]), a, Term::var(t.labels[n - 1]))));
  }
  return t;
}

void collect_labels(const BataninTree &t, std::vector<VarName> &out,
                    bool leaves_only) {
  if (!leaves_only || t.is_leaf()) out.push_back(t.labels[0]);
  for (std::size_t i = 0; i < t.branches.size(); ++i) {
    if (!leaves_only) out.push_back(t.labels[i + 1]);
    collect_labels(t.branches[i], out, leaves_only);
  }
}

bool contains_label(const BataninTree &t, const VarName &x) {
  for (const auto &l : t.labels) {
    if (l == x) return true;
  }
  for (const auto &b : t.branches) {
    if (contains_label(b, x)) return true;
  }
  return false;
}

[[noreturn]] void not_lm(const VarName &x) {
  throw CattError(ErrorKind::NotLocallyMaximal,
                  fmt::format("'{}' is not a leaf of the tree", x));
}

}  // namespace

void validate(const BataninTree &t) {
  std::set<VarName> seen;
  validate_rec(t, seen);
}

Context tree_to_ctx(const BataninTree &t) {
  validate(t);
  Context out;
  emit(t, Type::star(), out);
  return out;
}

BataninTree ctx_to_tree(const Context &ctx) {
  check_pd(ctx);
  std::size_t pos = 0;
  BataninTree t = parse_level(ctx, pos, Type::star());
  if (pos != ctx.size()) {
    throw CattError(ErrorKind::NotPasting,
                    fmt::format("trailing entries from position {}", pos));
  }
  return t;
}

int linear_height(const BataninTree &t) {
  return t.branches.size() == 1 ? 1 + linear_height(t.branches[0]) : 0;
}

int depth(const BataninTree &t) {
  int d = 0;
  for (const auto &b : t.branches) d = std::max(d, depth(b) + 1);
  return d;
}

bool is_linear(const BataninTree &t) {
  if (t.branches.empty()) return true;
  return t.branches.size() == 1 && is_linear(t.branches[0]);
}

std::vector<VarName> all_labels(const BataninTree &t) {
  std::vector<VarName> out;
  collect_labels(t, out, false);
  return out;
}

std::vector<VarName> leaf_labels(const BataninTree &t) {
  std::vector<VarName> out;
  collect_labels(t, out, true);
  return out;
}

TreePath branching_path(const BataninTree &t, const VarName &x) {
  if (t.is_leaf()) {
    if (t.labels[0] == x) return {0};
    not_lm(x);
  }
  for (std::size_t n = 0; n < t.branches.size(); ++n) {
    const BataninTree &b = t.branches[n];
    if (!contains_label(b, x)) continue;
    const int idx = static_cast<int>(n);
    if (is_linear(b)) {
      // The leaf of a linear branch is its only locally maximal label.
      const BataninTree *cur = &b;
      while (!cur->is_leaf()) cur = &cur->branches[0];
      if (cur->labels[0] != x) not_lm(x);
      return {idx};
    }
    TreePath rest = branching_path(b, x);
    rest.insert(rest.begin(), idx);
    return rest;
  }
  not_lm(x);
}

bool path_valid(const BataninTree &t, const TreePath &p) {
  if (p.empty()) return false;
  const BataninTree *cur = &t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int n = p[i];
    if (n < 0) return false;
    if (i + 1 == p.size()) {
      return (cur->is_leaf() && n == 0) ||
             static_cast<std::size_t>(n) < cur->branches.size();
    }
    if (static_cast<std::size_t>(n) >= cur->branches.size()) return false;
    cur = &cur->branches[static_cast<std::size_t>(n)];
  }
  return false;
}

namespace {

BataninTree insert_rec(const BataninTree &s, const TreePath &p, std::size_t i,
                       const BataninTree &t) {
  const auto n = static_cast<std::size_t>(p[i]);
  if (i + 1 == p.size() && s.is_leaf()) return t;
  BataninTree out;
  out.labels.assign(s.labels.begin(), s.labels.begin() + static_cast<std::ptrdiff_t>(n));
  out.labels.insert(out.labels.end(), t.labels.begin(), t.labels.end());
  out.labels.insert(out.labels.end(),
                    s.labels.begin() + static_cast<std::ptrdiff_t>(n + 2),
                    s.labels.end());
  out.branches.assign(s.branches.begin(),
                      s.branches.begin() + static_cast<std::ptrdiff_t>(n));
  if (i + 1 == p.size()) {
    out.branches.insert(out.branches.end(), t.branches.begin(), t.branches.end());
  } else {
    out.branches.push_back(insert_rec(s.branches[n], p, i + 1, t.branches[0]));
  }
  out.branches.insert(out.branches.end(),
                      s.branches.begin() + static_cast<std::ptrdiff_t>(n + 1),
                      s.branches.end());
  return out;
}

}  // namespace

BataninTree insert_tree(const BataninTree &s, const TreePath &p,
                        const BataninTree &t) {
  if (!path_valid(s, p)) {
    throw CattError(ErrorKind::PathInvalid,
                    fmt::format("path {} does not address the tree {}",
                                to_string(p), render(s)));
  }
  if (linear_height(t) < static_cast<int>(p.size()) - 1) {
    throw CattError(ErrorKind::LinearHeightTooSmall,
                    fmt::format("linear height {} is below {}", linear_height(t),
                                p.size() - 1));
  }
  return insert_rec(s, p, 0, t);
}

std::string render(const BataninTree &t) {
  std::string out = "[" + t.labels[0];
  for (std::size_t i = 0; i < t.branches.size(); ++i) {
    out += ' ';
    out += render(t.branches[i]);
    out += ' ';
    out += t.labels[i + 1];
  }
  out += ']';
  return out;
}

namespace {

struct TreeParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string &what) const {
    throw CattError(ErrorKind::SyntaxError,
                    fmt::format("tree syntax at offset {}: {}", pos, what));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  VarName label() {
    skip();
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] != '[' && s[pos] != ']' &&
           !std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (start == pos) fail("expected a label");
    return VarName(s.substr(start, pos - start));
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) fail(fmt::format("expected '{}'", c));
    ++pos;
  }
  BataninTree tree() {
    expect('[');
    BataninTree t;
    t.labels.push_back(label());
    skip();
    while (pos < s.size() && s[pos] == '[') {
      t.branches.push_back(tree());
      t.labels.push_back(label());
      skip();
    }
    expect(']');
    return t;
  }
};

}  // namespace

BataninTree parse_tree(std::string_view text) {
  TreeParser p{text};
  BataninTree t = p.tree();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  validate(t);
  return t;
}

std::string to_string(const TreePath &p) {
  return fmt::format("[{}]", fmt::join(p, ","));
}

}  // namespace catt
