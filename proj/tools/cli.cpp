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


#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "catt/insertion.hpp"
#include "catt/pasting.hpp"
#include "catt/reduction.hpp"
#include "catt/surface.hpp"
#include "catt/tree.hpp"
#include "catt/typecheck.hpp"

namespace catt::cli {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string mode = "sa";
  bool json = false;
  bool no_disc = false;
  bool trace = false;
  std::string file;
  std::string name1;
  std::string name2;
  std::string ctx_literal;
  std::vector<std::string> insert;
};

// Output is either human-readable lines or one JSON document at the end.
struct Emitter {
  const Options &opt;
  std::ostream &out;
  std::ostream &err;
  json doc = json::object();

  void line(const std::string &s) {
    if (!opt.json) out << s << '\n';
  }
  void error(const std::string &s) {
    if (opt.json) {
      doc["errors"].push_back(s);
    } else {
      err << s << '\n';
    }
  }
  int finish(int code) {
    if (opt.json) {
      doc["exit"] = code;
      out << doc.dump(2) << '\n';
    }
    return code;
  }
};

struct Loaded {
  Environment env;
  std::vector<DeclOutcome> outcomes;
};

std::optional<std::string> read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses and checks a file. Returns the exit code on parse failure.
std::optional<int> load(const Options &opt, Emitter &em, Checker &checker,
                        Loaded &loaded) {
  auto text = read_file(opt.file);
  if (!text) {
    em.error(fmt::format("cannot read '{}'", opt.file));
    return kUsage;
  }
  SourceFile file;
  try {
    file = parse(*text);
  } catch (const SurfaceError &e) {
    em.error(fmt::format("{}:{}", opt.file, e.what()));
    return kUsage;
  }
  loaded.outcomes = check_file(file, checker, loaded.env);
  return std::nullopt;
}

const Entry *lookup(const Loaded &loaded, const std::string &name, Emitter &em) {
  for (const auto &o : loaded.outcomes) {
    if (o.name != name) continue;
    if (!o.ok) {
      em.error(o.message);
      return nullptr;
    }
    return loaded.env.find(name);
  }
  em.error(fmt::format("no declaration named '{}'", name));
  return nullptr;
}

// Why a lookup failed: an unknown name is a usage error, an ill-typed
// declaration a type error.
int miss(const Loaded &loaded, const std::string &name) {
  for (const auto &o : loaded.outcomes) {
    if (o.name == name) return kFail;
  }
  return kUsage;
}

int cmd_check(const Options &opt, Emitter &em, Checker &checker) {
  Loaded loaded;
  if (auto code = load(opt, em, checker, loaded)) return em.finish(*code);
  bool all_ok = true;
  em.doc["declarations"] = json::array();
  for (const auto &o : loaded.outcomes) {
    json j{{"name", o.name}, {"line", o.span.line}, {"ok", o.ok}};
    if (o.ok) {
      const Type ty = o.entry->kind == DeclKind::Coh ? o.entry->type
                                                     : *o.report->type;
      j["type"] = to_string(ty);
      j["trace"] = o.report->trace;
      em.line(fmt::format("ok {} : {}", o.name, to_string(ty)));
    } else {
      all_ok = false;
      j["error"] = o.message;
      if (o.report) j["failure"] = std::string(to_string(o.report->failure));
      em.line(fmt::format("error {}: {}", o.name, o.message));
    }
    em.doc["declarations"].push_back(std::move(j));
  }
  return em.finish(all_ok ? kOk : kFail);
}

int cmd_normalize(const Options &opt, Emitter &em, Checker &checker) {
  Loaded loaded;
  if (auto code = load(opt, em, checker, loaded)) return em.finish(*code);
  const Entry *e = lookup(loaded, opt.name1, em);
  if (e == nullptr) return em.finish(miss(loaded, opt.name1));
  if (opt.trace) {
    em.doc["trace"] = json::array();
    for (const auto &step : normalize_trace(e->term, checker.options())) {
      em.line(to_string(step));
      em.doc["trace"].push_back(
          json{{"rule", std::string(to_string(step.redex.rule))},
               {"position", render_position(step.redex.position)},
               {"before", to_string(step.before)},
               {"after", to_string(step.after)}});
    }
  }
  const Term nf = normalize(e->term, checker.options());
  em.doc["normal_form"] = to_string(nf);
  em.line(to_string(nf));
  return em.finish(kOk);
}

int cmd_eq(const Options &opt, Emitter &em, Checker &checker) {
  Loaded loaded;
  if (auto code = load(opt, em, checker, loaded)) return em.finish(*code);
  const Entry *a = lookup(loaded, opt.name1, em);
  const Entry *b = lookup(loaded, opt.name2, em);
  if (a == nullptr || b == nullptr) {
    return em.finish(std::max(a ? kOk : miss(loaded, opt.name1),
                              b ? kOk : miss(loaded, opt.name2)));
  }
  if (!alpha_eq(a->tele, b->tele)) {
    em.error(fmt::format("'{}' and '{}' have different telescopes", a->name, b->name));
    em.doc["equal"] = false;
    em.line("not equal");
    return em.finish(kFail);
  }
  const Term bt = apply(b->term, renaming(b->tele.names(), a->tele.names()));
  const bool eq = checker.equal(a->term, bt);
  em.doc["equal"] = eq;
  em.line(eq ? "equal" : "not equal");
  return em.finish(eq ? kOk : kFail);
}

int cmd_infer(const Options &opt, Emitter &em, Checker &checker) {
  Loaded loaded;
  if (auto code = load(opt, em, checker, loaded)) return em.finish(*code);
  const Entry *e = lookup(loaded, opt.name1, em);
  if (e == nullptr) return em.finish(miss(loaded, opt.name1));
  const Type ty = checker.infer_term(e->tele, e->term);
  em.doc["type"] = to_string(ty);
  em.line(to_string(ty));
  return em.finish(kOk);
}

int cmd_tree(const Options &opt, Emitter &em, Checker &checker) {
  Context ctx;
  try {
    if (!opt.ctx_literal.empty()) {
      ctx = elaborate_telescope(Environment{}, parse_telescope(opt.ctx_literal));
    } else {
      Loaded loaded;
      if (auto code = load(opt, em, checker, loaded)) return em.finish(*code);
      const Entry *e = lookup(loaded, opt.name1, em);
      if (e == nullptr) return em.finish(miss(loaded, opt.name1));
      ctx = e->tele;
    }
  } catch (const SurfaceError &e) {
    em.error(e.what());
    return em.finish(e.kind() == ErrorKind::SyntaxError ? kUsage : kFail);
  }
  try {
    const BataninTree t = ctx_to_tree(ctx);
    em.doc["tree"] = render(t);
    em.line(render(t));
    if (opt.insert.size() == 2) {
      const BataninTree inner = parse_tree(opt.insert[1]);
      const Context theta = tree_to_ctx(inner);
      const InsertionResult res =
          insert_ctx({ctx, opt.insert[0], theta, unbiased_type(theta)});
      const BataninTree out = ctx_to_tree(res.inserted);
      em.doc["path"] = to_string(res.path);
      em.doc["inserted"] = render(out);
      em.doc["iota"] = to_string(res.iota);
      em.doc["kappa"] = to_string(res.kappa);
      em.line(fmt::format("path {}", to_string(res.path)));
      em.line(fmt::format("inserted {}", render(out)));
      em.line(fmt::format("ι {}", to_string(res.iota)));
      em.line(fmt::format("κ {}", to_string(res.kappa)));
    }
  } catch (const CattError &e) {
    em.error(e.what());
    return em.finish(e.kind() == ErrorKind::SyntaxError ? kUsage : kFail);
  }
  return em.finish(kOk);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Typechecker and normalizer for strictly associative Catt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--mode", opt.mode, "Equality: catt (syntactic) or sa (insertion)")
      ->check(CLI::IsMember({"catt", "sa"}));
  app.add_flag("--json", opt.json, "Emit one JSON report");
  app.add_flag("--no-disc-insertion", opt.no_disc,
               "Do not insert coherences over discs");

  auto *check = app.add_subcommand("check", "Typecheck every declaration");
  check->add_option("file", opt.file)->required();
  auto *norm = app.add_subcommand("normalize", "Print the normal form of a declaration");
  norm->add_option("file", opt.file)->required();
  norm->add_option("name", opt.name1)->required();
  norm->add_flag("--trace", opt.trace, "Print every reduction step");
  auto *eq = app.add_subcommand("eq", "Decide equality of two declarations");
  eq->add_option("file", opt.file)->required();
  eq->add_option("name1", opt.name1)->required();
  eq->add_option("name2", opt.name2)->required();
  auto *infer = app.add_subcommand("infer", "Print the inferred type of a declaration");
  infer->add_option("file", opt.file)->required();
  infer->add_option("name", opt.name1)->required();
  auto *tree = app.add_subcommand("tree", "Print the Batanin tree of a telescope");
  tree->add_option("file", opt.file);
  tree->add_option("name", opt.name1);
  tree->add_option("--ctx", opt.ctx_literal, "Telescope literal");
  tree->add_option("--insert", opt.insert, "VAR TREE: insert TREE at VAR")
      ->expected(2)
      ->allow_extra_args(false);

  std::vector<const char *> argv{"catt"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (tree->parsed() && opt.ctx_literal.empty() &&
        (opt.file.empty() || opt.name1.empty())) {
      throw CLI::ValidationError("tree", "needs FILE NAME or --ctx");
    }
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Checker checker(opt.mode == "catt" ? Mode::Catt : Mode::CattSa,
                  ReductionOptions{!opt.no_disc});
  Emitter em{opt, out, err};
  em.doc["mode"] = opt.mode;
  try {
    if (check->parsed()) return cmd_check(opt, em, checker);
    if (norm->parsed()) return cmd_normalize(opt, em, checker);
    if (eq->parsed()) return cmd_eq(opt, em, checker);
    if (infer->parsed()) return cmd_infer(opt, em, checker);
    if (tree->parsed()) return cmd_tree(opt, em, checker);
  } catch (const std::exception &e) {
    em.error(e.what());
    return em.finish(kFail);
  }
  return kUsage;
}

}  // namespace catt::cli
