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


#include "catt/typecheck.hpp"

#include <fmt/format.h>

#include <functional>

#include "catt/pasting.hpp"

namespace catt {

std::string_view to_string(Mode mode) {
  return mode == Mode::Catt ? "catt" : "sa";
}

std::string_view to_string(Judgement j) {
  switch (j) {
    case Judgement::Context: return "context";
    case Judgement::Type: return "type";
    case Judgement::Substitution: return "substitution";
    case Judgement::Term: return "term";
    case Judgement::WellFormedSub: return "well-formed substitution";
  }
  return "?";
}

std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::None: return "None";
    case Failure::UnknownVariable: return "UnknownVariable";
    case Failure::DuplicateVariable: return "DuplicateVariable";
    case Failure::EndpointTypeMismatch: return "EndpointTypeMismatch";
    case Failure::ArityMismatch: return "ArityMismatch";
    case Failure::NotPasting: return "NotPasting";
    case Failure::SupportViolation: return "SupportViolation";
    case Failure::TypeMismatch: return "TypeMismatch";
    case Failure::GlobularityViolation: return "GlobularityViolation";
    case Failure::NotGlobular: return "NotGlobular";
  }
  return "?";
}

bool Checker::equal(const Term &a, const Term &b) const {
  return mode_ == Mode::Catt ? alpha_eq(a, b) : def_eq(a, b, opts_);
}

bool Checker::equal(const Type &a, const Type &b) const {
  return mode_ == Mode::Catt ? alpha_eq(a, b) : def_eq(a, b, opts_);
}

namespace {

TypingReport run(Judgement kind, std::string subject,
                 const std::function<std::optional<Type>(std::vector<std::string> &)> &body) {
  TypingReport rep;
  rep.kind = kind;
  rep.subject = std::move(subject);
  try {
    rep.type = body(rep.trace);
    rep.ok = true;
  } catch (const TypeError &e) {
    rep.failure = e.failure();
    rep.message = e.what();
  } catch (const CattError &e) {
    switch (e.kind()) {
      case ErrorKind::UnknownVariable: rep.failure = Failure::UnknownVariable; break;
      case ErrorKind::DuplicateVariable: rep.failure = Failure::DuplicateVariable; break;
      case ErrorKind::NotPasting: rep.failure = Failure::NotPasting; break;
      case ErrorKind::Undefined: rep.failure = Failure::ArityMismatch; break;
      default: rep.failure = Failure::TypeMismatch; break;
    }
    rep.message = e.what();
  }
  return rep;
}

VarSet names_of(const Context &ctx) { return ctx.name_set(); }

std::string set_str(const VarSet &s) {
  return fmt::format("{{{}}}", fmt::join(s, ", "));
}

}  // namespace

void Checker::ctx_(const Context &ctx, std::vector<std::string> &trace) {
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    type_(ctx.prefix(i), ctx[i].type, trace);
    trace.push_back(fmt::format("ctx-ext {}", ctx[i].name));
  }
}

void Checker::type_(const Context &ctx, const Type &a,
                    std::vector<std::string> &trace) {
  if (a.is_star()) return;
  type_(ctx, a.base(), trace);
  for (const Term *end : {&a.src(), &a.tgt()}) {
    Type got = term_(ctx, *end, trace);
    if (!equal(got, a.base())) {
      throw TypeError(Failure::EndpointTypeMismatch,
                      fmt::format("endpoint {} has type {}, expected {}",
                                  to_string(*end), to_string(got),
                                  to_string(a.base())));
    }
  }
  trace.push_back(fmt::format("arr {}", to_string(a)));
}

void Checker::sub_(const Context &delta, const Substitution &sigma,
                   const Context &gamma, std::vector<std::string> &trace) {
  if (sigma.size() != gamma.size()) {
    throw TypeError(Failure::ArityMismatch,
                    fmt::format("substitution has {} entries, context has {}",
                                sigma.size(), gamma.size()));
  }
  Substitution prefix;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (sigma[i].name != gamma[i].name) {
      throw TypeError(Failure::ArityMismatch,
                      fmt::format("entry {} maps '{}', expected '{}'", i,
                                  sigma[i].name, gamma[i].name));
    }
    const Type want = apply(gamma[i].type, prefix);
    const Type got = term_(delta, sigma[i].term, trace);
    if (!equal(got, want)) {
      throw TypeError(Failure::TypeMismatch,
                      fmt::format("argument {} ↦ {} has type {}, expected {}",
                                  sigma[i].name, to_string(sigma[i].term),
                                  to_string(got), to_string(want)));
    }
    prefix.push_back(sigma[i].name, sigma[i].term);
    trace.push_back(fmt::format("sub-ext {}", sigma[i].name));
  }
}

std::string Checker::head_(const Term &t, std::vector<std::string> &trace) {
  const std::string key =
      canonical_key(Term::coh(t.ctx(), t.type(), Substitution{}));
  if (auto it = heads_.find(key); it != heads_.end()) return it->second;

  const Context &delta = t.ctx();
  ctx_(delta, trace);
  try {
    check_pd(delta);
  } catch (const CattError &e) {
    throw TypeError(Failure::NotPasting, e.what());
  }
  type_(delta, t.type(), trace);

  const Type a = mode_ == Mode::Catt ? t.type() : normalize(t.type(), opts_);
  const VarSet all = names_of(delta);
  std::string rule;
  if (support(delta, a) == all) {
    rule = "coh";
  } else if (!a.is_star() && dim(delta) >= 1) {
    const VarSet src = support(delta, a.src());
    const VarSet tgt = support(delta, a.tgt());
    const VarSet want_src = names_of(boundary_ctx(delta, Sign::Minus));
    const VarSet want_tgt = names_of(boundary_ctx(delta, Sign::Plus));
    if (src == want_src && tgt == want_tgt) {
      rule = "comp";
    } else {
      std::string why;
      if (src != want_src) {
        why = fmt::format("source support {} differs from ∂⁻ {}", set_str(src),
                          set_str(want_src));
      }
      if (tgt != want_tgt) {
        if (!why.empty()) why += "; ";
        why += fmt::format("target support {} differs from ∂⁺ {}", set_str(tgt),
                           set_str(want_tgt));
      }
      throw TypeError(Failure::SupportViolation,
                      fmt::format("(coh) needs full support {}, got {}; (comp): {}",
                                  set_str(all), set_str(support(delta, a)), why));
    }
  } else {
    throw TypeError(Failure::SupportViolation,
                    fmt::format("(coh) needs full support {}, got {}; (comp) "
                                "needs an arrow type over a positive-dimensional "
                                "pasting context",
                                set_str(all), set_str(support(delta, a))));
  }
  heads_.emplace(key, rule);
  return rule;
}

Type Checker::term_(const Context &ctx, const Term &t,
                    std::vector<std::string> &trace) {
  if (t.is_var()) {
    const Type *ty = ctx.find(t.name());
    if (ty == nullptr) {
      throw TypeError(Failure::UnknownVariable,
                      fmt::format("unknown variable '{}'", t.name()));
    }
    trace.push_back(fmt::format("var {}", t.name()));
    return *ty;
  }
  const std::string rule = head_(t, trace);
  sub_(ctx, t.sub(), t.ctx(), trace);
  trace.push_back(rule);
  return apply(t.type(), t.sub());
}

TypingReport Checker::check_ctx(const Context &ctx) {
  return run(Judgement::Context, to_string(ctx), [&](auto &trace) {
    ctx_(ctx, trace);
    return std::optional<Type>{};
  });
}

TypingReport Checker::check_type(const Context &ctx, const Type &a) {
  return run(Judgement::Type, to_string(a), [&](auto &trace) {
    type_(ctx, a, trace);
    return std::optional<Type>{};
  });
}

TypingReport Checker::check_sub(const Context &delta, const Substitution &sigma,
                                const Context &gamma) {
  return run(Judgement::Substitution, to_string(sigma), [&](auto &trace) {
    sub_(delta, sigma, gamma, trace);
    return std::optional<Type>{};
  });
}

TypingReport Checker::check_term(const Context &ctx, const Term &t, const Type &a) {
  return run(Judgement::Term, to_string(t), [&](auto &trace) {
    type_(ctx, a, trace);
    Type got = term_(ctx, t, trace);
    if (!equal(got, a)) {
      throw TypeError(Failure::TypeMismatch,
                      fmt::format("term has type {}, expected {}", to_string(got),
                                  to_string(a)));
    }
    return std::optional<Type>{got};
  });
}

TypingReport Checker::infer(const Context &ctx, const Term &t) {
  return run(Judgement::Term, to_string(t), [&](auto &trace) {
    return std::optional<Type>{term_(ctx, t, trace)};
  });
}

Type Checker::infer_term(const Context &ctx, const Term &t) {
  TypingReport rep = infer(ctx, t);
  if (!rep.ok) throw TypeError(rep.failure, rep.message);
  return *rep.type;
}

TypingReport Checker::check_well_formed_sub(const Context &gamma,
                                            const Substitution &sigma,
                                            const Context &delta) {
  return run(Judgement::WellFormedSub, to_string(sigma), [&](auto &trace) {
    for (const auto &e : gamma) {
      for (const auto &v : free_vars(e.type)) {
        if (!gamma.contains(v)) {
          throw TypeError(Failure::UnknownVariable,
                          fmt::format("unknown variable '{}'", v));
        }
      }
      std::function<bool(const Type &)> has_coh = [&](const Type &a) {
        return !a.is_star() &&
               (a.src().is_coh() || a.tgt().is_coh() || has_coh(a.base()));
      };
      if (has_coh(e.type)) {
        throw TypeError(Failure::NotGlobular,
                        fmt::format("'{}' has a coherence in its type", e.name));
      }
    }
    if (sigma.size() != gamma.size()) {
      throw TypeError(Failure::ArityMismatch,
                      fmt::format("substitution has {} entries, context has {}",
                                  sigma.size(), gamma.size()));
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (sigma[i].name != gamma[i].name) {
        throw TypeError(Failure::ArityMismatch,
                        fmt::format("entry {} maps '{}', expected '{}'", i,
                                    sigma[i].name, gamma[i].name));
      }
    }
    for (const auto &e : gamma) {
      const Term &u = sigma.at(e.name);
      const Type got = term_(delta, u, trace);
      if (got.dim() != e.type.dim()) {
        throw TypeError(Failure::GlobularityViolation,
                        fmt::format("'{}' has dimension {} but {} has dimension {}",
                                    e.name, e.type.dim(), to_string(u), got.dim()));
      }
      if (e.type.is_star()) continue;
      const int d = e.type.dim() - 1;
      const Term src = apply(e.type.src(), sigma);
      const Term tgt = apply(e.type.tgt(), sigma);
      if (!def_eq(term_boundary(delta, u, d, Sign::Minus), src, opts_) ||
          !def_eq(term_boundary(delta, u, d, Sign::Plus), tgt, opts_)) {
        throw TypeError(Failure::GlobularityViolation,
                        fmt::format("boundaries of {} ↦ {} do not match {} and {}",
                                    e.name, to_string(u), to_string(src),
                                    to_string(tgt)));
      }
      trace.push_back(fmt::format("glob {}", e.name));
    }
    return std::optional<Type>{};
  });
}

}  // namespace catt
