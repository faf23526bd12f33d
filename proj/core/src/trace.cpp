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

#include <charconv>
#include <sstream>

#include "lexer.hpp"
#include "rolecheck/temporal.hpp"

namespace rolecheck {

namespace {

using detail::Token;
using detail::TokenKind;

[[noreturn]] void syntax(const std::string& message) {
  throw Error(ErrorCode::kTraceSyntax, message);
}

class LineReader {
 public:
  explicit LineReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return tokens_[pos_].kind == TokenKind::kEnd; }
  const Token& peek() const { return tokens_[pos_]; }

  std::string word(const std::string& what) {
    if (peek().kind != TokenKind::kIdent) syntax("expected " + what);
    return tokens_[pos_++].text;
  }

  std::uint64_t number(const std::string& what) {
    if (peek().kind != TokenKind::kNumber) syntax("expected " + what);
    const auto& text = tokens_[pos_++].text;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc()) syntax(what + " is out of range");
    return value;
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void finish() {
    if (!done()) syntax("unexpected '" + peek().text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <SymbolKind K>
Id<K> lookup(const Policy& p, const std::string& name) {
  auto id = p.symbols.find_as<K>(name);
  if (!id) {
    throw Error(ErrorCode::kUnknownIdentifier,
                "unknown " + std::string(kind_name(K)) + " '" + name + "'");
  }
  return *id;
}

}  // namespace

std::string TraceReport::render() const {
  std::ostringstream os;
  for (const auto& e : events) {
    os << "t=" << e.tick.value << " " << event_kind_name(e.kind) << " " << e.detail << "\n";
  }
  if (abort) {
    os << "abort line=" << abort->line << " " << error_code_name(abort->code) << ": "
       << abort->message << "\n";
  }
  return os.str();
}

TraceReport run_trace(std::shared_ptr<const Policy> policy, std::string_view script,
                      std::span<const UserBinding> default_users) {
  TraceReport report;
  std::optional<TemporalWorld> world;
  std::size_t line_no = 0;

  auto sync_events = [&] {
    if (world) report.events = world->log();
  };

  std::size_t start = 0;
  while (start <= script.size()) {
    auto end = script.find('\n', start);
    if (end == std::string_view::npos) end = script.size();
    const std::string_view line = script.substr(start, end - start);
    start = end + 1;
    ++line_no;

    try {
      LineReader in(detail::tokenize(line));
      if (in.done()) continue;
      const std::string command = in.word("a command");
      if (!world && command != "init") syntax("the first command must be 'init'");

      if (command == "init") {
        if (world) syntax("'init' may only appear once");
        std::vector<UserBinding> inline_users;
        while (!in.done()) {
          UserBinding b;
          b.user = in.word("a user name");
          if (!in.accept(TokenKind::kEquals)) syntax("expected '=' after user name");
          b.roles.push_back(in.word("a role name"));
          while (in.accept(TokenKind::kComma)) b.roles.push_back(in.word("a role name"));
          inline_users.push_back(std::move(b));
        }
        if (inline_users.empty() && default_users.empty()) {
          syntax("'init' needs user bindings (user=Role,...) for this policy");
        }
        world = inline_users.empty() ? init_world(policy, default_users)
                                     : init_world(policy, inline_users);
      } else if (command == "state") {
        const std::string to = in.word("a state name");
        in.finish();
        world = transition_state(*world, to);
      } else if (command == "grant") {
        const UserId user = world->user(in.word("a user name"));
        const RoleId role = lookup<SymbolKind::kRole>(*policy, in.word("a role name"));
        const auto duration = in.number("a duration");
        in.finish();
        if (duration > UINT32_MAX) syntax("duration is out of range");
        world = grant_emergency(*world, user, role,
                                static_cast<std::uint32_t>(duration));
      } else if (command == "tick") {
        std::uint64_t steps = 1;
        if (!in.done()) steps = in.number("a step count");
        in.finish();
        world = tick(*world, steps);
      } else if (command == "eval") {
        const UserId user = world->user(in.word("a user name"));
        const ActionId action = lookup<SymbolKind::kAction>(*policy, in.word("an action name"));
        const ResourceId resource =
            lookup<SymbolKind::kResource>(*policy, in.word("a resource name"));
        std::optional<EnvId> env;
        if (!in.done()) {
          if (in.word("'env'") != "env") syntax("expected 'env'");
          env = lookup<SymbolKind::kEnvironment>(*policy, in.word("an environment name"));
        }
        in.finish();
        auto [next, decision] =
            evaluate_in_world(*world, user, action, resource, env);
        world = std::move(next);
        report.decisions.push_back(std::move(decision));
      } else {
        syntax("unknown command '" + command + "'");
      }
    } catch (const Error& e) {
      sync_events();
      // The message already names the code; drop any location prefix from
      // the per-line tokenizer.
      std::string message = e.what();
      if (e.location()) {
        const auto colon = message.find(": ");
        if (colon != std::string::npos) message = message.substr(colon + 2);
      }
      report.abort = TraceAbort{line_no, e.code(), message};
      return report;
    }
  }
  sync_events();
  if (!world) {
    report.abort = TraceAbort{line_no, ErrorCode::kTraceSyntax, "script has no 'init' command"};
  }
  return report;
}

}  // namespace rolecheck
