// Copyright 2026 The rolecheck Authors.
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

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <utility>

#include "lexer.hpp"
#include "rolecheck/dsl.hpp"

namespace rolecheck {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 27> kKeywords = {
    "policy",     "states",     "default_state", "environments", "roles",
    "resources",  "group",      "actions",       "rules",        "permit",
    "deny",       "on",         "env",           "state",        "sod",
    "exclusive",  "with",       "emergency",     "role",         "grantable_in",
    "max_duration", "assertions", "assert",      "role_coverage", "no_combination",
    "decision",   "is",
};

bool is_keyword(std::string_view text) {
  return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

struct NameRef {
  std::string text;
  SourceLoc loc;
};

struct RawSelector {
  bool wildcard = false;
  std::vector<NameRef> items;
};

struct RawRule {
  Effect effect = Effect::kDeny;
  NameRef role;
  RawSelector actions;
  RawSelector targets;
  std::optional<RawSelector> envs;
  std::optional<RawSelector> states;
  SourceLoc loc;
};

struct RawSod {
  NameRef pivot;
  std::vector<NameRef> excluded;
  std::optional<RawSelector> states;
  SourceLoc loc;
};

struct RawEmergency {
  NameRef role;
  std::vector<NameRef> states;
  Token duration;
  SourceLoc loc;
};

enum class RawAssertKind { kCoverage, kExclusion, kDecision };

struct RawAssertion {
  NameRef name;
  RawAssertKind kind = RawAssertKind::kCoverage;
  NameRef role;
  std::vector<NameRef> excluded;
  NameRef action;
  NameRef target;
  std::optional<NameRef> env;
  std::optional<NameRef> state;
  Effect expected = Effect::kDeny;
  SourceLoc loc;
};

struct Declaration {
  NameRef name;
  SymbolKind kind;
};

struct RawResource {
  NameRef name;
  std::optional<NameRef> group;
};

struct RawPolicy {
  NameRef name;
  SourceLoc loc;
  std::set<std::string, std::less<>> sections;
  std::vector<Declaration> declarations;  // source order
  std::vector<NameRef> states;
  std::vector<RawResource> resources;
  std::optional<NameRef> default_state;
  std::optional<SourceLoc> env_section;
  std::vector<RawRule> rules;
  std::vector<RawSod> sod;
  std::vector<RawEmergency> emergency;
  std::vector<RawAssertion> assertions;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RawPolicy parse() {
    RawPolicy raw;
    raw.loc = peek().loc;
    expect_keyword("policy");
    raw.name = declared_name("policy name");
    expect(TokenKind::kLBrace, "'{' after policy name");
    while (peek().kind != TokenKind::kRBrace) {
      section(raw);
    }
    next();
    if (peek().kind != TokenKind::kEnd) {
      fail(peek(), "end of input after the closing '}'");
    }
    return raw;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::kIdent && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected) const {
    std::string found = at.kind == TokenKind::kEnd
                            ? std::string("end of input")
                            : "'" + at.text + "'";
    throw Error(ErrorCode::kSyntaxError,
                "expected " + expected + ", found " + found, at.loc);
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    return next();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail(peek(), "'" + std::string(kw) + "'");
    next();
  }

  // A name being declared or referenced; keywords are rejected.
  NameRef declared_name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::kIdent) fail(t, what);
    if (is_keyword(t.text)) {
      throw Error(ErrorCode::kMalformedIdentifier,
                  "'" + t.text + "' is a reserved word and cannot be used as " +
                      what,
                  t.loc);
    }
    next();
    return NameRef{t.text, t.loc};
  }

  // name (, name)*
  std::vector<NameRef> comma_list(const std::string& what) {
    std::vector<NameRef> out;
    out.push_back(declared_name(what));
    while (peek().kind == TokenKind::kComma) {
      next();
      out.push_back(declared_name(what));
    }
    return out;
  }

  RawSelector selector(const std::string& what) {
    if (peek().kind == TokenKind::kStar) {
      next();
      return RawSelector{true, {}};
    }
    return RawSelector{false, comma_list(what + " or '*'")};
  }

  // { name [,] name ... }
  std::vector<NameRef> braced_names(const std::string& what) {
    expect(TokenKind::kLBrace, "'{'");
    std::vector<NameRef> out;
    while (peek().kind != TokenKind::kRBrace) {
      out.push_back(declared_name(what));
      if (peek().kind == TokenKind::kComma) next();
    }
    next();
    return out;
  }

  void mark_section(RawPolicy& raw, const Token& head) {
    if (!raw.sections.insert(head.text).second) {
      throw Error(ErrorCode::kSyntaxError,
                  "section '" + head.text + "' appears more than once",
                  head.loc);
    }
  }

  void declare(RawPolicy& raw, const std::vector<NameRef>& names,
               SymbolKind kind) {
    for (const auto& n : names) raw.declarations.push_back({n, kind});
  }

  void section(RawPolicy& raw) {
    const Token& head = peek();
    if (head.kind != TokenKind::kIdent) fail(head, "a section name or '}'");
    const std::string name = head.text;
    if (name == "states") {
      mark_section(raw, head);
      next();
      raw.states = braced_names("a state name");
      declare(raw, raw.states, SymbolKind::kState);
    } else if (name == "default_state") {
      mark_section(raw, head);
      next();
      raw.default_state = declared_name("a state name");
    } else if (name == "environments") {
      mark_section(raw, head);
      raw.env_section = head.loc;
      next();
      declare(raw, braced_names("an environment name"),
              SymbolKind::kEnvironment);
    } else if (name == "roles") {
      mark_section(raw, head);
      next();
      declare(raw, braced_names("a role name"), SymbolKind::kRole);
    } else if (name == "actions") {
      mark_section(raw, head);
      next();
      declare(raw, braced_names("an action name"), SymbolKind::kAction);
    } else if (name == "resources") {
      mark_section(raw, head);
      next();
      resources(raw);
    } else if (name == "rules") {
      mark_section(raw, head);
      next();
      rules(raw);
    } else if (name == "sod") {
      mark_section(raw, head);
      next();
      sod(raw);
    } else if (name == "emergency") {
      mark_section(raw, head);
      next();
      emergency(raw);
    } else if (name == "assertions") {
      mark_section(raw, head);
      next();
      assertions(raw);
    } else {
      fail(head, "a section name or '}'");
    }
  }

  void resources(RawPolicy& raw) {
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      RawResource res;
      res.name = declared_name("a resource name");
      raw.declarations.push_back({res.name, SymbolKind::kResource});
      if (at_keyword("group")) {
        next();
        res.group = declared_name("a group name");
        raw.declarations.push_back({*res.group, SymbolKind::kGroup});
      }
      raw.resources.push_back(std::move(res));
      if (peek().kind == TokenKind::kComma) next();
    }
    next();
  }

  void rules(RawPolicy& raw) {
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      RawRule rule;
      rule.loc = peek().loc;
      if (at_keyword("permit")) {
        rule.effect = Effect::kPermit;
      } else if (at_keyword("deny")) {
        rule.effect = Effect::kDeny;
      } else {
        fail(peek(), "'permit', 'deny' or '}'");
      }
      next();
      rule.role = declared_name("a role name");
      rule.actions = selector("an action");
      expect_keyword("on");
      rule.targets = selector("a resource or group");
      for (int i = 0; i < 2; ++i) {
        if (at_keyword("env") && !rule.envs) {
          next();
          rule.envs = selector("an environment");
        } else if (at_keyword("state") && !rule.states) {
          next();
          rule.states = selector("a state");
        }
      }
      raw.rules.push_back(std::move(rule));
    }
    next();
  }

  void sod(RawPolicy& raw) {
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      RawSod c;
      c.loc = peek().loc;
      expect_keyword("exclusive");
      c.pivot = declared_name("a role name");
      expect_keyword("with");
      c.excluded = comma_list("a role name");
      if (at_keyword("state")) {
        next();
        c.states = selector("a state");
      }
      raw.sod.push_back(std::move(c));
    }
    next();
  }

  void emergency(RawPolicy& raw) {
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      RawEmergency e;
      e.loc = peek().loc;
      expect_keyword("role");
      e.role = declared_name("a role name");
      expect_keyword("grantable_in");
      e.states = comma_list("a state name");
      expect_keyword("max_duration");
      e.duration = expect(TokenKind::kNumber, "a positive tick count");
      raw.emergency.push_back(std::move(e));
    }
    next();
  }

  void assertions(RawPolicy& raw) {
    expect(TokenKind::kLBrace, "'{'");
    while (peek().kind != TokenKind::kRBrace) {
      RawAssertion a;
      a.loc = peek().loc;
      expect_keyword("assert");
      a.name = declared_name("an assertion name");
      if (at_keyword("role_coverage")) {
        next();
        a.kind = RawAssertKind::kCoverage;
      } else if (at_keyword("no_combination")) {
        next();
        a.kind = RawAssertKind::kExclusion;
        a.role = declared_name("a role name");
        expect_keyword("with");
        a.excluded = comma_list("a role name");
      } else if (at_keyword("decision")) {
        next();
        a.kind = RawAssertKind::kDecision;
        a.role = declared_name("a role name");
        a.action = declared_name("an action name");
        expect_keyword("on");
        a.target = declared_name("a resource or group name");
        if (at_keyword("env")) {
          next();
          a.env = declared_name("an environment name");
        }
        if (at_keyword("state")) {
          next();
          a.state = declared_name("a state name");
        }
        expect_keyword("is");
        if (at_keyword("permit")) {
          a.expected = Effect::kPermit;
        } else if (at_keyword("deny")) {
          a.expected = Effect::kDeny;
        } else {
          fail(peek(), "'permit' or 'deny'");
        }
        next();
      } else {
        fail(peek(), "'role_coverage', 'no_combination' or 'decision'");
      }
      raw.assertions.push_back(std::move(a));
    }
    next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Resolves a RawPolicy into a validated Policy.
class Builder {
 public:
  Policy build(const RawPolicy& raw) {
    for (std::string_view required : {"states", "roles", "resources", "actions"}) {
      if (!raw.sections.contains(required)) {
        throw Error(ErrorCode::kMissingSection,
                    "missing required section '" + std::string(required) + "'",
                    raw.loc);
      }
    }
    p_.name = raw.name.text;
    p_.loc = raw.loc;
    declare_symbols(raw);
    resolve_default_state(raw);
    for (const auto& r : raw.rules) p_.rules.push_back(rule(r));
    for (const auto& c : raw.sod) p_.sod_constraints.push_back(sod(c));
    for (const auto& e : raw.emergency) p_.emergency_specs.push_back(emergency(e));
    std::set<std::string, std::less<>> names;
    for (const auto& a : raw.assertions) {
      if (!names.insert(a.name.text).second) {
        throw Error(ErrorCode::kInvalidPolicy,
                    "duplicate assertion name '" + a.name.text + "'",
                    a.name.loc);
      }
      p_.assertions.push_back(assertion(a));
    }
    return std::move(p_);
  }

 private:
  [[noreturn]] static void invalid(const std::string& msg, SourceLoc loc) {
    throw Error(ErrorCode::kInvalidPolicy, msg, loc);
  }

  void declare_symbols(const RawPolicy& raw) {
    for (const auto& d : raw.declarations) {
      auto existing = p_.symbols.find(d.name.text);
      if (existing && existing->kind == d.kind && d.kind != SymbolKind::kGroup) {
        invalid("duplicate declaration of " + std::string(kind_name(d.kind)) +
                    " '" + d.name.text + "'",
                d.name.loc);
      }
      try {
        p_.symbols.intern(d.name.text, d.kind);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), d.name.loc);
      }
    }
    if (p_.role_count() == 0) invalid("at least one role must be declared", raw.loc);
    if (p_.role_count() > RoleSet::kCapacity) {
      invalid("at most 64 roles may be declared", raw.loc);
    }
    if (p_.resource_count() == 0) {
      invalid("at least one resource must be declared", raw.loc);
    }
    if (p_.action_count() == 0) invalid("at least one action must be declared", raw.loc);
    if (p_.state_count() == 0) invalid("at least one state must be declared", raw.loc);

    p_.groups.assign(p_.symbols.count(SymbolKind::kGroup), {});
    p_.resource_group.assign(p_.resource_count(), std::nullopt);
    for (const auto& res : raw.resources) {
      const auto rid = *p_.symbols.find_as<SymbolKind::kResource>(res.name.text);
      if (res.group) {
        const auto gid = *p_.symbols.find_as<SymbolKind::kGroup>(res.group->text);
        p_.groups[gid.ordinal].push_back(rid);
        p_.resource_group[rid.ordinal] = gid;
      }
    }
  }

  void resolve_default_state(const RawPolicy& raw) {
    p_.default_state = raw.default_state ? resolve<SymbolKind::kState>(*raw.default_state)
                                         : StateId{0};
  }

  template <SymbolKind K>
  Id<K> resolve(const NameRef& n) const {
    auto ref = p_.symbols.find(n.text);
    if (!ref) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "unknown " + std::string(kind_name(K)) + " '" + n.text + "'",
                  n.loc);
    }
    if (ref->kind != K) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "'" + n.text + "' is a " + std::string(kind_name(ref->kind)) +
                      ", expected a " + std::string(kind_name(K)),
                  n.loc);
    }
    return Id<K>{ref->ordinal};
  }

  Target resolve_target(const NameRef& n) const {
    auto ref = p_.symbols.find(n.text);
    if (ref && ref->kind == SymbolKind::kResource) return ResourceId{ref->ordinal};
    if (ref && ref->kind == SymbolKind::kGroup) return GroupId{ref->ordinal};
    if (!ref) {
      throw Error(ErrorCode::kUnresolvedReference,
                  "unknown resource or group '" + n.text + "'", n.loc);
    }
    throw Error(ErrorCode::kUnresolvedReference,
                "'" + n.text + "' is a " + std::string(kind_name(ref->kind)) +
                    ", expected a resource or group",
                n.loc);
  }

  template <SymbolKind K>
  std::vector<Id<K>> resolve_all(const std::vector<NameRef>& names) const {
    std::vector<Id<K>> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(resolve<K>(n));
    return out;
  }

  template <SymbolKind K>
  Selector<Id<K>> resolve_selector(const std::optional<RawSelector>& s) const {
    if (!s || s->wildcard) return Selector<Id<K>>::any();
    return Selector<Id<K>>::of(resolve_all<K>(s->items));
  }

  void require_environments(SourceLoc loc) const {
    if (!p_.has_environments()) {
      invalid("environment qualifier used in a policy without an "
              "environments section",
              loc);
    }
  }

  Rule rule(const RawRule& r) const {
    Rule out;
    out.effect = r.effect;
    out.loc = r.loc;
    out.role = resolve<SymbolKind::kRole>(r.role);
    out.actions = resolve_selector<SymbolKind::kAction>(r.actions);
    if (r.targets.wildcard) {
      out.targets = Selector<Target>::any();
    } else {
      std::vector<Target> targets;
      for (const auto& n : r.targets.items) targets.push_back(resolve_target(n));
      out.targets = Selector<Target>::of(std::move(targets));
    }
    if (r.envs) require_environments(r.loc);
    out.envs = resolve_selector<SymbolKind::kEnvironment>(r.envs);
    out.states = resolve_selector<SymbolKind::kState>(r.states);
    return out;
  }

  SodConstraint sod(const RawSod& c) const {
    SodConstraint out;
    out.loc = c.loc;
    out.pivot = resolve<SymbolKind::kRole>(c.pivot);
    out.excluded = resolve_all<SymbolKind::kRole>(c.excluded);
    if (std::find(out.excluded.begin(), out.excluded.end(), out.pivot) !=
        out.excluded.end()) {
      invalid("SOD pivot '" + c.pivot.text + "' cannot exclude itself", c.loc);
    }
    out.states = resolve_selector<SymbolKind::kState>(c.states);
    return out;
  }

  EmergencySpec emergency(const RawEmergency& e) const {
    EmergencySpec out;
    out.loc = e.loc;
    out.role = resolve<SymbolKind::kRole>(e.role);
    for (const auto& spec : p_.emergency_specs) {
      if (spec.role == out.role) {
        invalid("role '" + e.role.text + "' already has an emergency spec", e.loc);
      }
    }
    out.grantable_in = resolve_all<SymbolKind::kState>(e.states);
    std::uint32_t duration = 0;
    const auto& text = e.duration.text;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), duration);
    if (ec != std::errc() || duration < 1) {
      invalid("max_duration must be a positive tick count", e.duration.loc);
    }
    out.max_duration = duration;
    return out;
  }

  Assertion assertion(const RawAssertion& a) const {
    Assertion out;
    out.name = a.name.text;
    out.loc = a.loc;
    switch (a.kind) {
      case RawAssertKind::kCoverage:
        out.body = RoleCoverage{};
        break;
      case RawAssertKind::kExclusion: {
        MutualExclusion m;
        m.pivot = resolve<SymbolKind::kRole>(a.role);
        m.excluded = resolve_all<SymbolKind::kRole>(a.excluded);
        if (std::find(m.excluded.begin(), m.excluded.end(), m.pivot) != m.excluded.end()) {
          invalid("assertion pivot '" + a.role.text + "' cannot exclude itself", a.loc);
        }
        out.body = std::move(m);
        break;
      }
      case RawAssertKind::kDecision: {
        DecisionAssert d;
        d.role = resolve<SymbolKind::kRole>(a.role);
        d.action = resolve<SymbolKind::kAction>(a.action);
        d.target = resolve_target(a.target);
        if (a.env) {
          require_environments(a.env->loc);
          d.env = resolve<SymbolKind::kEnvironment>(*a.env);
        }
        if (a.state) d.state = resolve<SymbolKind::kState>(*a.state);
        d.expected = a.expected;
        out.body = d;
        break;
      }
    }
    return out;
  }

  Policy p_;
};

}  // namespace

Policy parse_policy(std::string_view source) {
  Parser parser(detail::tokenize(source));
  return Builder().build(parser.parse());
}

}  // namespace rolecheck
