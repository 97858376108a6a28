// Copyright 2026 The mqanneal authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: generate instances, embed them as qubos, sample,
// run the iterative fixing loop, print scaling reports, verify solutions.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mqanneal/anneal.hpp"
#include "mqanneal/embed.hpp"
#include "mqanneal/iterfix.hpp"
#include "mqanneal/qubo.hpp"

namespace {

using nlohmann::json;

// Exit codes shared with the test suite.
constexpr int kOk = 0;
constexpr int kNotSolved = 2;    // unsatisfied, excluded, or failed check
constexpr int kInvalid = 3;      // bad arguments or malformed input
constexpr int kResource = 4;     // a size or work cap was exceeded

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mqanneal::ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mqanneal::ValidationError("cannot write '" + path + "'");
  out << content;
}

struct GenerateOpts {
  std::uint32_t n = 4;
  std::uint32_t m = 4;
  std::uint64_t seed = 0;
  std::string out;
  std::string solution_out;
  bool as_json = false;
};

int cmd_generate(const GenerateOpts& o) {
  const auto planted = mqanneal::generate_planted(o.n, o.m, o.seed);
  const std::string sol_path =
      o.solution_out.empty() ? o.out + ".sol" : o.solution_out;
  write_file(o.out, mqanneal::format_system(planted.system));
  write_file(sol_path, planted.solution.to_string() + "\n");
  if (o.as_json) {
    json j;
    j["n_vars"] = o.n;
    j["polynomials"] = o.m;
    j["seed"] = o.seed;
    j["instance"] = o.out;
    j["solution_file"] = sol_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << o.out << " (" << o.n << " variables, " << o.m
              << " polynomials), planted solution in " << sol_path << "\n";
  }
  return kOk;
}

struct EmbedOpts {
  std::string instance;
  std::string method = "truncated";
  std::uint32_t k = 4;
  std::string weighting = "delta";
  std::size_t nnf_cap = mqanneal::kDefaultNnfTermCap;
  std::string out;
  std::string format = "text";
  bool as_json = false;
};

int cmd_embed(const EmbedOpts& o) {
  const mqanneal::MQSystem system = mqanneal::parse_system(read_file(o.instance));
  const mqanneal::EmbedMethod method =
      mqanneal::embed_method_from_string(o.method);

  mqanneal::Embedding emb;
  switch (method) {
    case mqanneal::EmbedMethod::kDirect: {
      mqanneal::DirectOptions opts;
      opts.weighting = o.weighting == "per-term"
                           ? mqanneal::PenaltyWeighting::kPerTerm
                           : mqanneal::PenaltyWeighting::kDelta;
      opts.nnf_term_cap = o.nnf_cap;
      emb = mqanneal::embed_direct(system, opts);
      break;
    }
    case mqanneal::EmbedMethod::kTruncated:
      emb = mqanneal::embed_truncated(system, o.k);
      break;
    case mqanneal::EmbedMethod::kPenalty:
      emb = mqanneal::embed_penalty(system);
      break;
  }

  const std::string payload =
      o.format == "json" ? mqanneal::qubo_to_json(emb.qubo, &emb.roles)
                         : mqanneal::write_qubo(emb.qubo, &emb.roles);
  write_file(o.out, payload);

  json j;
  j["method"] = mqanneal::to_string(method);
  j["n_original"] = emb.n_original;
  j["logical_qubits"] = emb.qubo.n_vars;
  j["max_abs_coefficient"] = emb.qubo.max_abs_coefficient();
  j["terms"] = emb.qubo.term_count();
  j["output"] = o.out;
  if (method == mqanneal::EmbedMethod::kTruncated) {
    const auto est = mqanneal::estimate_truncated_qubits(system, o.k);
    j["k"] = o.k;
    j["estimate_formula"] = mqanneal::to_string(est.formula);
    j["estimate_prediction"] = est.prediction;
  }
  if (o.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "embedded " << o.instance << " (" << j["method"].get<std::string>()
              << "): " << emb.qubo.n_vars << " logical qubits, max |coefficient| "
              << emb.qubo.max_abs_coefficient() << ", written to " << o.out
              << "\n";
    if (j.contains("estimate_formula"))
      std::cout << "estimate (k=" << o.k
                << "): formula " << j["estimate_formula"].get<std::string>()
                << ", prediction " << j["estimate_prediction"].get<std::int64_t>()
                << "\n";
  }
  return kOk;
}

struct SolveOpts {
  std::string input;
  mqanneal::AnnealParams params;
  std::string samples_out;
  std::size_t show = 1;
  bool as_json = false;
};

int cmd_solve(const SolveOpts& o) {
  const mqanneal::QuboFile qf = mqanneal::read_qubo(read_file(o.input));
  const mqanneal::SampleSet ss = mqanneal::sample(qf.qubo, o.params);
  if (!o.samples_out.empty()) write_file(o.samples_out, ss.to_jsonl());

  if (o.as_json) {
    json j;
    j["reads"] = o.params.reads;
    j["unique_assignments"] = ss.size();
    j["best_energy"] = ss.best().energy;
    j["best_assignment"] = ss.best().assignment.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t shown = 0;
    for (const auto& r : ss.records()) {
      if (shown++ >= o.show) break;
      std::cout << r.energy << " " << r.assignment.to_string() << " x"
                << r.multiplicity << "\n";
    }
  }
  return kOk;
}

struct IterateOpts {
  std::string input;
  std::string instance;
  mqanneal::IterParams params;
  std::string trace_out;
  bool as_json = false;
};

int cmd_iterate(const IterateOpts& o) {
  const mqanneal::QuboFile qf = mqanneal::read_qubo(read_file(o.input));

  mqanneal::Embedding emb;
  emb.qubo = qf.qubo;
  emb.roles = qf.roles.empty()
                  ? mqanneal::VarRegistry(qf.qubo.n_vars,
                                          mqanneal::VarRole::original())
                  : qf.roles;
  std::uint32_t n_original = 0;
  for (const auto& role : emb.roles)
    if (role.kind == mqanneal::RoleKind::kOriginal) ++n_original;
  emb.n_original = n_original;
  emb.ground_energy = 0;

  std::optional<mqanneal::MQSystem> system;
  if (!o.instance.empty()) {
    system = mqanneal::parse_system(read_file(o.instance));
    if (system->n_vars != emb.n_original)
      throw mqanneal::ValidationError(
          "instance has " + std::to_string(system->n_vars) +
          " variables but the qubo registry marks " +
          std::to_string(emb.n_original) + " original variables");
  }

  const mqanneal::IterTrace trace =
      mqanneal::iterate(emb, o.params, system ? &*system : nullptr);
  const std::string trace_json = mqanneal::trace_to_json(trace);
  if (!o.trace_out.empty()) write_file(o.trace_out, trace_json);

  if (o.as_json) {
    std::cout << trace_json << "\n";
  } else {
    std::cout << "status: " << mqanneal::to_string(trace.status) << " after "
              << trace.iterations.size() << " iterations\n";
    if (trace.solution)
      std::cout << "solution: " << trace.solution->to_string() << "\n";
    else if (!trace.iterations.empty())
      std::cout << "best energy: " << trace.iterations.back().best_energy
                << "\n";
  }
  return trace.status == mqanneal::IterStatus::kSolved ? kOk : kNotSolved;
}

struct ReportOpts {
  std::uint32_t n_min = 4, n_max = 40;
  std::uint32_t k_min = 4, k_max = 8;
  std::string out;
  bool as_json = false;
};

int cmd_report(const ReportOpts& o) {
  const mqanneal::ScalingReport report =
      mqanneal::scaling_report(o.n_min, o.n_max, o.k_min, o.k_max);
  const std::string payload = o.as_json
                                  ? mqanneal::scaling_report_json(report)
                                  : mqanneal::scaling_report_tsv(report);
  if (o.out.empty())
    std::cout << payload;
  else
    write_file(o.out, payload);
  return kOk;
}

struct VerifyOpts {
  std::string instance;
  std::string assignment;
  std::string solution_file;
  bool as_json = false;
};

int cmd_verify(const VerifyOpts& o) {
  const mqanneal::MQSystem system =
      mqanneal::parse_system(read_file(o.instance));
  std::string bits = o.assignment;
  if (bits.empty()) {
    bits = read_file(o.solution_file);
    while (!bits.empty() && (bits.back() == '\n' || bits.back() == '\r'))
      bits.pop_back();
  }
  const mqanneal::Assignment a = mqanneal::Assignment::from_string(bits);
  const auto residuals = mqanneal::eval_system(system, a);
  const bool ok = std::all_of(residuals.begin(), residuals.end(),
                              [](std::uint8_t r) { return !r; });
  if (o.as_json) {
    json j;
    j["assignment"] = a.to_string();
    j["satisfied"] = ok;
    j["residuals"] = residuals;
    std::cout << j.dump(2) << "\n";
  } else {
    if (ok) {
      std::cout << "satisfies all " << residuals.size() << " equations\n";
    } else {
      std::size_t violated = 0;
      for (auto r : residuals) violated += r;
      std::cout << "violates " << violated << " of " << residuals.size()
                << " equations\n";
    }
  }
  return ok ? kOk : kNotSolved;
}

void add_anneal_options(CLI::App* cmd, mqanneal::AnnealParams* p) {
  cmd->add_option("--reads", p->reads, "Annealing reads");
  cmd->add_option("--sweeps", p->sweeps, "Sweeps per read");
  cmd->add_option("--beta-start", p->beta.start, "Initial inverse temperature");
  cmd->add_option("--beta-end", p->beta.end, "Final inverse temperature");
  cmd->add_flag_callback(
      "--linear-beta", [p] { p->beta.geometric = false; },
      "Interpolate beta linearly instead of geometrically");
  cmd->add_option("--seed", p->seed, "Random seed");
  cmd->add_option("--threads", p->threads, "Worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean quadratic systems as two-body qubo Hamiltonians"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* cgen = app.add_subcommand("generate", "Create a planted instance");
  cgen->add_option("-n,--vars", gen.n, "Number of variables")->required();
  cgen->add_option("-m,--polys", gen.m, "Number of polynomials")->required();
  cgen->add_option("--seed", gen.seed, "Random seed");
  cgen->add_option("-o,--output", gen.out, "Instance file")->required();
  cgen->add_option("--solution-out", gen.solution_out,
                   "Solution sidecar (default: <output>.sol)");
  cgen->add_flag("--json", gen.as_json, "JSON summary on stdout");

  EmbedOpts emb;
  auto* cemb = app.add_subcommand("embed", "Embed an instance as a qubo");
  cemb->add_option("-i,--input", emb.instance, "Instance file")->required();
  cemb->add_option("-m,--method", emb.method, "direct, truncated or penalty")
      ->check(CLI::IsMember({"direct", "truncated", "penalty"}));
  cemb->add_option("-k,--max-terms", emb.k,
                   "Largest XOR block (truncated method)");
  cemb->add_option("--weighting", emb.weighting,
                   "Penalty weighting for the direct method")
      ->check(CLI::IsMember({"delta", "per-term"}));
  cemb->add_option("--nnf-cap", emb.nnf_cap,
                   "Term cap for integer-form conversion");
  cemb->add_option("-o,--output", emb.out, "Qubo file")->required();
  cemb->add_option("--format", emb.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cemb->add_flag("--json", emb.as_json, "JSON summary on stdout");

  SolveOpts sol;
  auto* csol = app.add_subcommand("solve", "Anneal a qubo file");
  csol->add_option("-i,--input", sol.input, "Qubo file")->required();
  add_anneal_options(csol, &sol.params);
  csol->add_option("-o,--samples-out", sol.samples_out,
                   "Write the sample set as JSON lines");
  csol->add_option("--show", sol.show, "Print this many records");
  csol->add_flag("--json", sol.as_json, "JSON summary on stdout");

  IterateOpts itr;
  auto* citr =
      app.add_subcommand("iterate", "Solve with iterative variable fixing");
  citr->add_option("-i,--input", itr.input, "Qubo file")->required();
  citr->add_option("--instance", itr.instance,
                   "Original instance, for solution verification");
  citr->add_option("--consensus", itr.params.consensus_count,
                   "Consensus window");
  citr->add_option("--max-iter", itr.params.max_iterations,
                   "Iteration budget");
  citr->add_option("--min-fix", itr.params.min_fix_per_round,
                   "Smallest acceptable batch of fixes");
  citr->add_option("--patience", itr.params.patience,
                   "Non-improving rounds before exclusion");
  add_anneal_options(citr, &itr.params.anneal);
  citr->add_option("-o,--trace-out", itr.trace_out, "Write the trace JSON");
  citr->add_flag("--json", itr.as_json, "Print the trace JSON on stdout");

  ReportOpts rep;
  auto* crep = app.add_subcommand("report", "Resource scaling report");
  crep->add_option("--n-min", rep.n_min, "Smallest n");
  crep->add_option("--n-max", rep.n_max, "Largest n");
  crep->add_option("--k-min", rep.k_min, "Smallest truncation length");
  crep->add_option("--k-max", rep.k_max, "Largest truncation length");
  crep->add_option("-o,--output", rep.out, "Write to a file instead of stdout");
  crep->add_flag("--json", rep.as_json, "JSON instead of TSV");

  VerifyOpts ver;
  auto* cver =
      app.add_subcommand("verify", "Check an assignment against an instance");
  cver->add_option("-i,--input", ver.instance, "Instance file")->required();
  auto* opt_a =
      cver->add_option("-a,--assignment", ver.assignment, "Bitstring, x1 first");
  auto* opt_f =
      cver->add_option("--solution-file", ver.solution_file, "Bitstring file");
  opt_a->excludes(opt_f);
  cver->add_flag("--json", ver.as_json, "JSON summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (app.got_subcommand(cgen)) return cmd_generate(gen);
    if (app.got_subcommand(cemb)) return cmd_embed(emb);
    if (app.got_subcommand(csol)) return cmd_solve(sol);
    if (app.got_subcommand(citr)) return cmd_iterate(itr);
    if (app.got_subcommand(crep)) return cmd_report(rep);
    if (app.got_subcommand(cver)) {
      if (ver.assignment.empty() && ver.solution_file.empty())
        throw mqanneal::ValidationError(
            "verify needs --assignment or --solution-file");
      return cmd_verify(ver);
    }
  } catch (const mqanneal::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const mqanneal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
