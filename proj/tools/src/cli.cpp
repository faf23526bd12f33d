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

#include "rolecheck_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "rolecheck/corpus.hpp"
#include "rolecheck/dsl.hpp"
#include "rolecheck/render.hpp"
#include "rolecheck/temporal.hpp"
#include "rolecheck/verifier.hpp"

namespace rolecheck::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string file;
  std::string builtin;
};

struct Loaded {
  std::shared_ptr<const Policy> policy;
  std::vector<UserBinding> users;
};

void add_source(CLI::App* sub, Source& src) {
  sub->add_option("file", src.file, "Policy file");
  sub->add_option("--builtin", src.builtin, "Built-in policy: policy1, policy2 or policy3");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const Source& src) {
  if (src.file.empty() == src.builtin.empty()) {
    throw UsageError("give exactly one of a policy file or --builtin ID");
  }
  if (!src.builtin.empty()) {
    auto entry = load_builtin(src.builtin);
    return Loaded{std::move(entry.policy), std::move(entry.users)};
  }
  return Loaded{std::make_shared<const Policy>(parse_policy(read_file(src.file))), {}};
}

template <SymbolKind K>
Id<K> lookup(const Policy& p, const std::string& name) {
  if (auto id = p.symbols.find_as<K>(name)) return *id;
  throw Error(ErrorCode::kUnknownIdentifier, "policy '" + p.name + "' declares no " +
                                                 std::string(kind_name(K)) + " '" + name + "'");
}

std::optional<EnvId> env_option(const Policy& p, const std::string& env) {
  if (env.empty()) return std::nullopt;
  if (!p.has_environments()) {
    throw Error(ErrorCode::kEnvMismatch, "policy '" + p.name + "' declares no environments");
  }
  return lookup<SymbolKind::kEnvironment>(p, env);
}

StateId state_option(const Policy& p, const std::string& state) {
  return state.empty() ? p.default_state : lookup<SymbolKind::kState>(p, state);
}

int cmd_check(const Source& src, bool strict, std::ostream& out) {
  const auto loaded = load(src);
  const auto diags = validate_policy(*loaded.policy);
  for (const auto& d : diags) out << render_diagnostic(d) << '\n';
  out << "policy " << loaded.policy->name << ": ok, " << diags.size()
      << (diags.size() == 1 ? " warning\n" : " warnings\n");
  return strict && !diags.empty() ? kNegative : kOk;
}

struct EvalArgs {
  std::vector<std::string> roles;
  std::string action;
  std::string resource;
  std::string env;
  std::string state;
  bool explain = false;
};

int cmd_eval(const Source& src, const EvalArgs& a, std::ostream& out) {
  const auto loaded = load(src);
  const Policy& p = *loaded.policy;
  AccessRequest req;
  for (const auto& r : a.roles) req.roles.insert(lookup<SymbolKind::kRole>(p, r));
  req.action = lookup<SymbolKind::kAction>(p, a.action);
  req.resource = lookup<SymbolKind::kResource>(p, a.resource);
  req.env = env_option(p, a.env);
  req.state = state_option(p, a.state);
  const Decision d = evaluate(p, req);
  if (a.explain) {
    out << render_explanation(p, req, d);
  } else {
    out << effect_name(d.effect) << '\n';
  }
  return d.permitted() ? kOk : kNegative;
}

int cmd_matrix(const Source& src, const std::string& state, const std::string& env,
               const std::string& format, std::ostream& out) {
  const auto fmt = parse_matrix_format(format);
  if (!fmt) throw UsageError("--format must be table, csv or structured");
  const auto loaded = load(src);
  const Policy& p = *loaded.policy;
  out << render_matrix(p, permission_matrix(p, state_option(p, state), env_option(p, env)), *fmt);
  return kOk;
}

struct VerifyArgs {
  std::string assertion;
  std::uint32_t users = 4;
  std::uint32_t ticks = 6;
  unsigned workers = 1;
  bool temporal = false;
};

int cmd_verify(const Source& src, const VerifyArgs& a, std::ostream& out) {
  const auto loaded = load(src);
  const Policy& p = *loaded.policy;
  Scope scope;
  scope.max_users = a.users;
  scope.max_ticks = a.ticks;
  VerifyOptions options;
  options.workers = a.workers;
  options.explore_grants = a.temporal;

  std::vector<std::pair<std::string, VerifyResult>> results;
  if (!a.assertion.empty()) {
    const Assertion& assertion = find_assertion(p, a.assertion);
    results.emplace_back(assertion.name, verify(p, assertion, scope, options));
  } else {
    results = verify_all(p, scope, options);
  }
  bool all_valid = true;
  for (const auto& [name, result] : results) {
    out << render_verify_result(p, name, result, scope);
    all_valid = all_valid && result.valid();
  }
  return all_valid ? kOk : kNegative;
}

int cmd_trace(const Source& src, const std::string& script, std::ostream& out) {
  const auto loaded = load(src);
  const auto report = run_trace(loaded.policy, read_file(script), loaded.users);
  out << report.render();
  return report.completed() ? kOk : kUsage;
}

int cmd_corpus_list(std::ostream& out) {
  for (auto id : corpus_ids()) {
    const auto entry = load_builtin(id);
    const Policy& p = *entry.policy;
    out << id << "  roles=" << p.role_count() << " resources=" << p.resource_count()
        << " actions=" << p.action_count() << " states=" << p.state_count()
        << " envs=" << p.env_count() << " rules=" << p.rules.size()
        << " assertions=" << p.assertions.size() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Role-based access control policy checker", "rolecheck"};
  app.require_subcommand(1);

  Source src;
  bool strict = false;
  auto* check = app.add_subcommand("check", "Parse and lint a policy");
  add_source(check, src);
  check->add_flag("--strict", strict, "Exit 1 when there are warnings");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Decide one access request");
  add_source(eval, src);
  eval->add_option("--roles", eval_args.roles, "Active roles, comma separated")
      ->required()
      ->delimiter(',');
  eval->add_option("--action", eval_args.action)->required();
  eval->add_option("--resource", eval_args.resource)->required();
  eval->add_option("--env", eval_args.env);
  eval->add_option("--state", eval_args.state, "Defaults to the policy's default state");
  eval->add_flag("--explain", eval_args.explain, "Show matched rules and combining");

  std::string matrix_state;
  std::string matrix_env;
  std::string matrix_format = "table";
  auto* matrix = app.add_subcommand("matrix", "Print the single-role permission matrix");
  add_source(matrix, src);
  matrix->add_option("--state", matrix_state);
  matrix->add_option("--env", matrix_env);
  matrix->add_option("--format", matrix_format, "table, csv or structured");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check assertions over a bounded scope");
  add_source(verify_cmd, src);
  verify_cmd->add_option("--assert", verify_args.assertion, "Only this assertion");
  verify_cmd->add_option("--scope-users", verify_args.users)->check(CLI::Range(1, 64));
  verify_cmd->add_option("--scope-ticks", verify_args.ticks)->check(CLI::Range(0, 1000));
  verify_cmd->add_option("--workers", verify_args.workers)->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--temporal", verify_args.temporal,
                       "Also explore emergency grants and expiry");

  std::string script;
  auto* trace = app.add_subcommand("trace", "Run a temporal trace script");
  add_source(trace, src);
  trace->add_option("--script", script)->required();

  auto* corpus = app.add_subcommand("corpus", "Built-in policies");
  auto* corpus_list = corpus->add_subcommand("list", "List built-in policies");
  corpus->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(src, strict, out);
    if (eval->parsed()) return cmd_eval(src, eval_args, out);
    if (matrix->parsed()) return cmd_matrix(src, matrix_state, matrix_env, matrix_format, out);
    if (verify_cmd->parsed()) return cmd_verify(src, verify_args, out);
    if (trace->parsed()) return cmd_trace(src, script, out);
    if (corpus_list->parsed()) return cmd_corpus_list(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rolecheck::cli
