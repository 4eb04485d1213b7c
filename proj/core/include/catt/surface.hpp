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


// Surface language: lexer, parser, printer and elaborator for .catt files.
//
//   file   ::= decl*
//   decl   ::= "coh" name tele ":" type
//            | "def" name tele ":" type ":=" term
//   tele   ::= ("(" name ":" type ")")*
//   type   ::= "*" | term "->" term
//   term   ::= name | name "[" args "]"
//            | "coh" "{" tele ":" type "}" "[" args "]"
//   args   ::= [term ("," term)*]
//
// Comments run from "--" to the end of the line. The base of an arrow type is
// the type of its source. An application lists either every argument of the
// telescope or only those for its locally maximal variables; in the latter
// case the remaining arguments are recovered as boundaries.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catt/syntax.hpp"
#include "catt/typecheck.hpp"

namespace catt {

struct Span {
  int line = 1;
  int col = 1;
};

struct TermAst;

struct TypeAst {
  Span span;
  bool is_star = true;
  std::vector<TermAst> ends;  // source and target of an arrow
};

struct BinderAst {
  Span span;
  std::string name;
  TypeAst type;
};

struct TermAst {
  Span span;
  bool is_inline = false;   // coh{…}[…]
  std::string name;         // for named terms
  bool has_args = false;
  std::vector<TermAst> args;
  std::vector<BinderAst> tele;     // inline coherences
  std::shared_ptr<TypeAst> type;   // inline coherences
};

enum class DeclKind { Coh, Def };

struct DeclAst {
  Span span;
  DeclKind kind = DeclKind::Coh;
  std::string name;
  std::vector<BinderAst> tele;
  TypeAst type;
  std::optional<TermAst> body;
};

struct SourceFile {
  std::vector<DeclAst> decls;
};

/// Thrown by the parser (kind SyntaxError) and the elaborator (kind IllTyped).
class SurfaceError : public CattError {
 public:
  SurfaceError(ErrorKind kind, Span span, const std::string &msg);
  Span span() const { return span_; }

 private:
  Span span_;
};

SourceFile parse(std::string_view text);
/// A bare telescope, as accepted by `tree --ctx`.
std::vector<BinderAst> parse_telescope(std::string_view text);

std::string print(const SourceFile &file);
std::string print(const DeclAst &decl);
std::string print(const TermAst &t);
std::string print(const TypeAst &a);

/// Structural equality ignoring spans.
bool same(const SourceFile &a, const SourceFile &b);
bool same(const TermAst &a, const TermAst &b);
bool same(const TypeAst &a, const TypeAst &b);

/// An elaborated declaration.
struct Entry {
  DeclKind kind;
  std::string name;
  Span span;
  Context tele;
  Type type;
  /// For `def`, the body; for `coh`, the coherence applied to the identity.
  Term term;
};

class Environment {
 public:
  const Entry *find(const std::string &name) const;
  void add(Entry e);
  void mark_failed(const std::string &name) { failed_.emplace(name, true); }
  bool failed(const std::string &name) const { return failed_.contains(name); }
  const std::vector<Entry> &entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, bool> failed_;
};

/// Builds kernel syntax for a declaration. Throws SurfaceError.
Entry elaborate(const Environment &env, const DeclAst &decl);
Context elaborate_telescope(const Environment &env,
                            const std::vector<BinderAst> &tele);

struct DeclOutcome {
  std::string name;
  Span span;
  bool ok = false;
  std::optional<Entry> entry;
  std::optional<TypingReport> report;
  std::string message;
};

/// Elaborates and typechecks every declaration in order; well-typed ones are
/// added to `env`.
std::vector<DeclOutcome> check_file(const SourceFile &file, Checker &checker,
                                    Environment &env);

}  // namespace catt
