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


#include "catt/surface.hpp"

#include <fmt/format.h>

#include <cctype>
#include <map>

#include "catt/pasting.hpp"

namespace catt {

SurfaceError::SurfaceError(ErrorKind kind, Span span, const std::string &msg)
    : CattError(kind, fmt::format("{}:{}: {}", span.line, span.col, msg)),
      span_(span) {}

// ---------------------------------------------------------------------------
// Lexer.

namespace {

enum class Tok {
  Ident, Coh, Def, LParen, RParen, LBrack, RBrack, LBrace, RBrace,
  Colon, ColonEq, Arrow, Star, Comma, End,
};

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Coh: return "'coh'";
    case Tok::Def: return "'def'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool ident_char(unsigned char c) {
  return ident_start(c) || std::isdigit(c) || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  Span at;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++at.line;
        at.col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++at.col;
      }
    }
  };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (s.substr(i, 2) == "--") {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const Span start = at;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(static_cast<unsigned char>(s[j]))) ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "coh" ? Tok::Coh : word == "def" ? Tok::Def : Tok::Ident;
      out.push_back({kind, std::move(word), start});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '*': kind = Tok::Star; break;
      case ',': kind = Tok::Comma; break;
      case ':':
        if (s.substr(i, 2) == ":=") {
          kind = Tok::ColonEq;
          len = 2;
        } else {
          kind = Tok::Colon;
        }
        break;
      case '-':
        if (s.substr(i, 2) == "->") {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw SurfaceError(ErrorKind::SyntaxError, start,
                           fmt::format("unexpected character '{}'", s[i]));
    }
    out.push_back({kind, std::string(s.substr(i, len)), start});
    advance(len);
  }
  out.push_back({Tok::End, "", at});
  return out;
}

// ---------------------------------------------------------------------------
// Parser.

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SourceFile file() {
    SourceFile f;
    while (peek().kind != Tok::End) f.decls.push_back(decl());
    return f;
  }

  std::vector<BinderAst> telescope_only() {
    auto tele = telescope();
    expect(Tok::End);
    return tele;
  }

 private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string &what) const {
    throw SurfaceError(ErrorKind::SyntaxError, peek().span,
                       fmt::format("expected {}, found {}", what,
                                   peek().kind == Tok::End
                                       ? std::string(tok_name(Tok::End))
                                       : "'" + peek().text + "'"));
  }
  const Token &expect(Tok k) {
    if (peek().kind != k) fail(std::string(tok_name(k)));
    return next();
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  DeclAst decl() {
    DeclAst d;
    d.span = peek().span;
    if (accept(Tok::Coh)) {
      d.kind = DeclKind::Coh;
    } else if (accept(Tok::Def)) {
      d.kind = DeclKind::Def;
    } else {
      fail("'coh' or 'def'");
    }
    d.name = expect(Tok::Ident).text;
    d.tele = telescope();
    expect(Tok::Colon);
    d.type = type();
    if (d.kind == DeclKind::Def) {
      expect(Tok::ColonEq);
      d.body = term();
    }
    return d;
  }

  std::vector<BinderAst> telescope() {
    std::vector<BinderAst> out;
    while (peek().kind == Tok::LParen) {
      BinderAst b;
      b.span = next().span;
      b.name = expect(Tok::Ident).text;
      expect(Tok::Colon);
      b.type = type();
      expect(Tok::RParen);
      out.push_back(std::move(b));
    }
    return out;
  }

  TypeAst type() {
    TypeAst a;
    a.span = peek().span;
    if (accept(Tok::Star)) return a;
    a.is_star = false;
    a.ends.push_back(term());
    expect(Tok::Arrow);
    a.ends.push_back(term());
    return a;
  }

  TermAst term() {
    TermAst t;
    t.span = peek().span;
    if (accept(Tok::Coh)) {
      t.is_inline = true;
      expect(Tok::LBrace);
      t.tele = telescope();
      expect(Tok::Colon);
      t.type = std::make_shared<TypeAst>(type());
      expect(Tok::RBrace);
      if (peek().kind != Tok::LBrack) fail("'[' after an inline coherence");
    } else if (peek().kind == Tok::Ident) {
      t.name = next().text;
    } else {
      fail("a term");
    }
    if (accept(Tok::LBrack)) {
      t.has_args = true;
      if (!accept(Tok::RBrack)) {
        do {
          t.args.push_back(term());
        } while (accept(Tok::Comma));
        expect(Tok::RBrack);
      }
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceFile parse(std::string_view text) { return Parser(text).file(); }

std::vector<BinderAst> parse_telescope(std::string_view text) {
  return Parser(text).telescope_only();
}

// ---------------------------------------------------------------------------
// Printer and structural comparison.

namespace {

std::string print_tele(const std::vector<BinderAst> &tele) {
  std::string out;
  for (const auto &b : tele) {
    if (!out.empty()) out += ' ';
    out += fmt::format("({} : {})", b.name, print(b.type));
  }
  return out;
}

bool same_tele(const std::vector<BinderAst> &a, const std::vector<BinderAst> &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !same(a[i].type, b[i].type)) return false;
  }
  return true;
}

}  // namespace

std::string print(const TypeAst &a) {
  if (a.is_star) return "*";
  return fmt::format("{} -> {}", print(a.ends[0]), print(a.ends[1]));
}

std::string print(const TermAst &t) {
  std::string out;
  if (t.is_inline) {
    out = fmt::format("coh{{{} : {}}}", print_tele(t.tele), print(*t.type));
  } else {
    out = t.name;
  }
  if (t.has_args) {
    out += " [";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += print(t.args[i]);
    }
    out += ']';
  }
  return out;
}

std::string print(const DeclAst &d) {
  std::string out = d.kind == DeclKind::Coh ? "coh " : "def ";
  out += d.name;
  if (!d.tele.empty()) out += ' ' + print_tele(d.tele);
  out += " : " + print(d.type);
  if (d.body) out += " := " + print(*d.body);
  return out;
}

std::string print(const SourceFile &file) {
  std::string out;
  for (const auto &d : file.decls) out += print(d) + '\n';
  return out;
}

bool same(const TypeAst &a, const TypeAst &b) {
  if (a.is_star != b.is_star) return false;
  if (a.is_star) return true;
  return same(a.ends[0], b.ends[0]) && same(a.ends[1], b.ends[1]);
}

bool same(const TermAst &a, const TermAst &b) {
  if (a.is_inline != b.is_inline || a.has_args != b.has_args ||
      a.args.size() != b.args.size()) {
    return false;
  }
  if (a.is_inline) {
    if (!same_tele(a.tele, b.tele) || !same(*a.type, *b.type)) return false;
  } else if (a.name != b.name) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same(a.args[i], b.args[i])) return false;
  }
  return true;
}

bool same(const SourceFile &a, const SourceFile &b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const DeclAst &x = a.decls[i];
    const DeclAst &y = b.decls[i];
    if (x.kind != y.kind || x.name != y.name || !same_tele(x.tele, y.tele) ||
        !same(x.type, y.type) || x.body.has_value() != y.body.has_value()) {
      return false;
    }
    if (x.body && !same(*x.body, *y.body)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Elaboration.

const Entry *Environment::find(const std::string &name) const {
  for (const auto &e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void Environment::add(Entry e) { entries_.push_back(std::move(e)); }

namespace {

[[noreturn]] void elab_fail(Span span, const std::string &msg) {
  throw SurfaceError(ErrorKind::IllTyped, span, msg);
}

Type raw_type(const Context &local, const Term &t, Span span) {
  if (t.is_var()) {
    const Type *ty = local.find(t.name());
    if (ty == nullptr) elab_fail(span, fmt::format("unknown variable '{}'", t.name()));
    return *ty;
  }
  try {
    return apply(t.type(), t.sub());
  } catch (const CattError &e) {
    elab_fail(span, e.what());
  }
}

Term elab_term(const Environment &env, const Context &local, const TermAst &ast);

Type elab_type(const Environment &env, const Context &local, const TypeAst &ast) {
  if (ast.is_star) return Type::star();
  Term s = elab_term(env, local, ast.ends[0]);
  Term t = elab_term(env, local, ast.ends[1]);
  return Type::arr(s, raw_type(local, s, ast.ends[0].span), t);
}

Context elab_tele(const Environment &env, const std::vector<BinderAst> &tele) {
  Context ctx;
  for (const auto &b : tele) {
    Type ty = elab_type(env, ctx, b.type);
    if (ctx.contains(b.name)) {
      elab_fail(b.span, fmt::format("variable '{}' declared twice", b.name));
    }
    if (env.find(b.name) != nullptr) {
      elab_fail(b.span, fmt::format("variable '{}' shadows a declaration", b.name));
    }
    ctx.push_back(b.name, std::move(ty));
  }
  return ctx;
}

// Builds the argument substitution for a head telescope from either a full
// argument list or one argument per locally maximal variable.
Substitution build_args(const Context &local, const Context &head,
                        const std::vector<Term> &args, const TermAst &ast) {
  if (args.size() == head.size()) {
    std::vector<SubEntry> out;
    for (std::size_t i = 0; i < head.size(); ++i) out.push_back({head[i].name, args[i]});
    return Substitution(std::move(out));
  }
  std::vector<VarName> lm;
  if (is_pasting(head)) lm = locally_maximal_vars(head);
  if (lm.empty() || args.size() != lm.size()) {
    elab_fail(ast.span,
              fmt::format("'{}' expects {} arguments{}, got {}",
                          ast.is_inline ? std::string("coh") : ast.name, head.size(),
                          lm.empty() ? std::string()
                                     : fmt::format(" (or {} locally maximal)", lm.size()),
                          args.size()));
  }
  std::map<VarName, Term> value;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    const Term &u = args[i];
    const Type &ax = *head.find(lm[i]);
    const Span span = ast.args[i].span;
    const int du = raw_type(local, u, span).dim();
    if (du != ax.dim()) {
      elab_fail(span, fmt::format("argument for '{}' has dimension {}, expected {}",
                                  lm[i], du, ax.dim()));
    }
    value.emplace(lm[i], u);
    for (int k = 0; k < ax.dim(); ++k) {
      for (Sign eps : {Sign::Minus, Sign::Plus}) {
        const Term v = type_boundary(ax, k, eps);
        value.emplace(v.name(), term_boundary(local, u, k, eps));
      }
    }
  }
  std::vector<SubEntry> out;
  for (const auto &e : head) out.push_back({e.name, value.at(e.name)});
  return Substitution(std::move(out));
}

Term elab_term(const Environment &env, const Context &local, const TermAst &ast) {
  std::vector<Term> args;
  for (const auto &a : ast.args) args.push_back(elab_term(env, local, a));

  if (ast.is_inline) {
    Context head = elab_tele(env, ast.tele);
    Type ty = elab_type(env, head, *ast.type);
    return Term::coh(head, ty, build_args(local, head, args, ast));
  }
  if (local.contains(ast.name)) {
    if (ast.has_args) {
      elab_fail(ast.span, fmt::format("variable '{}' cannot take arguments", ast.name));
    }
    return Term::var(ast.name);
  }
  const Entry *e = env.find(ast.name);
  if (e == nullptr) {
    if (env.failed(ast.name)) {
      elab_fail(ast.span, fmt::format("'{}' refers to an ill-typed declaration", ast.name));
    }
    elab_fail(ast.span, fmt::format("unknown name '{}'", ast.name));
  }
  if (!ast.has_args && !e->tele.empty()) {
    elab_fail(ast.span, fmt::format("'{}' expects arguments", ast.name));
  }
  try {
    return apply(e->term, build_args(local, e->tele, args, ast));
  } catch (const SurfaceError &) {
    throw;
  } catch (const CattError &err) {
    elab_fail(ast.span, err.what());
  }
}

}  // namespace

Context elaborate_telescope(const Environment &env,
                            const std::vector<BinderAst> &tele) {
  return elab_tele(env, tele);
}

Entry elaborate(const Environment &env, const DeclAst &decl) {
  if (env.find(decl.name) != nullptr || env.failed(decl.name)) {
    elab_fail(decl.span, fmt::format("'{}' is already declared", decl.name));
  }
  Entry e{decl.kind, decl.name, decl.span, elab_tele(env, decl.tele), {}, Term::var("")};
  e.type = elab_type(env, e.tele, decl.type);
  if (decl.kind == DeclKind::Coh) {
    e.term = Term::coh(e.tele, e.type, identity_sub(e.tele));
  } else {
    e.term = elab_term(env, e.tele, *decl.body);
  }
  return e;
}

std::vector<DeclOutcome> check_file(const SourceFile &file, Checker &checker,
                                    Environment &env) {
  std::vector<DeclOutcome> out;
  for (const auto &d : file.decls) {
    DeclOutcome o;
    o.name = d.name;
    o.span = d.span;
    try {
      Entry e = elaborate(env, d);
      TypingReport rep = checker.check_ctx(e.tele);
      if (rep.ok) {
        rep = d.kind == DeclKind::Coh ? checker.infer(e.tele, e.term)
                                      : checker.check_term(e.tele, e.term, e.type);
      }
      o.ok = rep.ok;
      if (!rep.ok) {
        o.message = fmt::format("{}:{}: {}: {}", d.span.line, d.span.col,
                                to_string(rep.failure), rep.message);
      }
      o.report = std::move(rep);
      o.entry = std::move(e);
    } catch (const CattError &err) {
      o.message = err.what();
    }
    if (o.ok) {
      env.add(*o.entry);
    } else {
      env.mark_failed(d.name);
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace catt
