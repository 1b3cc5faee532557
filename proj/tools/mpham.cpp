// mpham: command-line front end over the mpham headers.
// Exit codes: 0 pass/found, 1 usage or malformed input, 2 fail/refuted,
// 3 unknown/inconclusive.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mpham/mpham.hpp"

using namespace mpham;

namespace {

enum Exit { kPass = 0, kUsage = 1, kFail = 2, kUnknown = 3 };

struct Globals {
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 0;
};

void emit(const Globals& opt, const Json& j, const std::string& text) {
  if (opt.json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

std::string set_text(VertexSet s) { return to_string(s); }

std::string list_text(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

struct ParamFlags {
  std::string nu = "0.05", tau = "0.2", gamma = "0.05";

  void attach(CLI::App* cmd, bool with_gamma) {
    cmd->add_option("--nu", nu, "robust-neighborhood fraction (decimal)")->capture_default_str();
    cmd->add_option("--tau", tau, "set-size margin (decimal)")->capture_default_str();
    if (with_gamma) cmd->add_option("--gamma", gamma, "degree slack as a fraction of n (decimal)")->capture_default_str();
  }
  ExpanderParams params() const {
    ExpanderParams p;
    p.nu = parse_decimal(nu);
    p.tau = parse_decimal(tau);
    p.gamma = parse_decimal(gamma);
    return p;
  }
};

int cmd_phi(const Globals& opt, const std::string& text, const std::string& mode_text) {
  ProfileMode mode;
  if (mode_text == "exact") mode = ProfileMode::exact;
  else if (mode_text == "asymptotic") mode = ProfileMode::asymptotic;
  else throw InvalidArguments("--mode must be exact or asymptotic");
  const auto prof = profile(Partition::parse(text), mode);
  if (prof.lambda == 1)
    std::cerr << "warning: lambda = 1, the largest part exceeds n/2 (outside the theorem's hypothesis)\n";
  std::string out;
  out += "partition  " + prof.partition.to_string() + " (" + to_string(mode) + ")\n";
  out += "lambda     " + std::to_string(prof.lambda) + "\n";
  out += "mu         " + std::to_string(prof.mu) + "\n";
  for (std::size_t i = 0; i < prof.f_values.size(); ++i)
    out += "f_" + std::to_string(i + 1) + std::string(i + 1 < 10 ? "        " : "       ") +
           to_string(prof.f_values[i]) + "\n";
  out += "f          " + to_string(prof.f) + "\n";
  out += "g          " + to_string(prof.g) + "\n";
  out += "h1         " + to_string(prof.h1) + "\n";
  out += "h2         " + to_string(prof.h2) + "\n";
  out += "h          " + to_string(prof.h) + "\n";
  out += "Phi        " + to_string(prof.phi) + "\n";
  for (int i = 0; i < prof.partition.k(); ++i)
    out += "delta(V_" + std::to_string(i + 1) + ") >= " + to_string(prof.phi - prof.partition.size(i)) + "\n";
  emit(opt, profile_to_json(prof), out);
  return kPass;
}

std::optional<TightnessCase> parse_case(const std::string& text, int index) {
  if (text == "auto") return std::nullopt;
  if (text == "f") return TightnessCase{CaseKind::f, index};
  if (text == "g") return TightnessCase{CaseKind::g, 0};
  if (text == "h1") return TightnessCase{CaseKind::h1, 0};
  if (text == "h2") return TightnessCase{CaseKind::h2, 0};
  throw InvalidArguments("--case must be auto, f, g, h1 or h2");
}

std::string certificate_path(const std::string& graph_path) {
  std::filesystem::path p(graph_path);
  return (p.parent_path() / (p.stem().string() + ".cert.json")).string();
}

int cmd_construct(const Globals& opt, const std::string& text, const std::string& case_text, int index,
                  const std::string& out_path, std::string cert_path) {
  const auto built = build_tightness(Partition::parse(text), parse_case(case_text, index));
  const std::string graph_text = graph_to_string(built.graph);
  const std::string cert_text = certificate_to_json(built.certificate).dump() + "\n";
  if (!out_path.empty()) {
    if (cert_path.empty()) cert_path = certificate_path(out_path);
    write_file(out_path, graph_text);
    write_file(cert_path, cert_text);
  }
  Json j;
  j["case"] = to_string(built.tcase);
  j["certificate"] = certificate_to_json(built.certificate);
  for (const auto& [name, set] : built.sets) j["sets"][name] = to_json(set);
  if (!out_path.empty()) {
    j["graph_file"] = out_path;
    j["certificate_file"] = cert_path;
  } else {
    j["graph"] = graph_to_json(built.graph);
  }
  std::string out = "case         " + to_string(built.tcase) + "\n";
  out += "certificate  " + std::string(to_string(built.certificate.kind)) + " S = " + set_text(built.certificate.s) + "\n";
  for (const auto& [name, set] : built.sets) out += "  " + name + " = " + set_text(set) + "\n";
  if (out_path.empty()) out += graph_text;
  else out += "wrote " + out_path + " and " + cert_path + "\n";
  emit(opt, j, out);
  return kPass;
}

int cmd_check(const Globals& opt, const std::string& file, std::optional<std::int64_t> slack,
              std::optional<std::string> gamma) {
  const auto g = load_graph(file);
  const auto prof = profile(g.partition());
  Rational s = 0;
  if (slack && gamma) throw InvalidArguments("give --slack or --gamma, not both");
  if (slack) s = Rational(*slack);
  if (gamma) s = parse_decimal(*gamma) * g.order();
  const auto report = check_degree_condition(g, prof, s);
  Json j = degree_report_to_json(report);
  j["phi"] = to_string(prof.phi);
  j["slack"] = to_string(s);
  std::string out = "Phi = " + to_string(prof.phi) + ", slack = " + to_string(s) + "\n";
  for (int i = 0; i < g.part_count(); ++i) {
    const int size = g.partition().size(i);
    out += "part " + std::to_string(i) + " (size " + std::to_string(size) + "): delta = " +
           std::to_string(delta_set(g, g.part(i))) + ", required " + to_string(prof.phi - size + s) +
           ", margin " + std::to_string(report.slack_per_part[static_cast<std::size_t>(i)]) + "\n";
  }
  out += report.pass ? "pass\n" : "fail (worst part " + std::to_string(report.worst_part) + ")\n";
  emit(opt, j, out);
  return report.pass ? kPass : kFail;
}

int outcome_code(SearchOutcome o) {
  return o == SearchOutcome::found ? kPass : o == SearchOutcome::none ? kFail : kUnknown;
}

int cmd_hamilton(const Globals& opt, const std::string& file, std::uint64_t budget) {
  const auto g = load_graph(file);
  const auto v = find_hamiltonian_cycle(g, budget);
  std::string out = v.found() ? "cycle " + list_text(v.sequence) + "\n" : std::string(to_string(v.outcome)) + "\n";
  emit(opt, verdict_to_json(v), out);
  return outcome_code(v.outcome);
}

int cmd_matching(const Globals& opt, const std::string& file) {
  const auto g = load_graph(file);
  const auto result = perfect_fractional_matching(g);
  if (const auto* m = std::get_if<FractionalMatching>(&result)) {
    Json j = matching_to_json(*m);
    std::string out = "perfect fractional matching: " + std::to_string(m->edges.size()) + " edges, " +
                      std::to_string(m->odd_cycles.size()) + " odd cycles\n";
    for (auto [u, v] : m->edges) out += "  edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    for (const auto& c : m->odd_cycles) out += "  odd cycle " + list_text(c) + "\n";
    emit(opt, j, out);
    return kPass;
  }
  const auto& viol = std::get<ExpansionViolation>(result);
  Json j;
  j["violation"] = violation_to_json(viol);
  emit(opt, j, "no perfect fractional matching: T = " + set_text(viol.t) + ", independent core " +
                   set_text(viol.independent_core) + "\n");
  return kFail;
}

int cmd_weak_expansion(const Globals& opt, const std::string& file, int cap) {
  const auto g = load_graph(file);
  const auto viol = weak_expansion_audit(g, cap);
  Json j;
  j["verdict"] = viol ? "violation" : "ok";
  if (viol) j["violation"] = violation_to_json(*viol);
  emit(opt, j,
       viol ? "violation: independent S = " + set_text(viol->independent_core) + " with |N(S)| < |S|\n" : "ok\n");
  return viol ? kFail : kPass;
}

AuditMode audit_mode(const Globals& opt, const std::string& mode, int samples, int cap) {
  if (mode == "exact") return AuditMode::exact(cap);
  if (mode == "sampled") return AuditMode::sampled(opt.seed, samples);
  throw InvalidArguments("--mode must be exact or sampled");
}

int cmd_expander(const Globals& opt, const std::string& file, const ParamFlags& flags, const std::string& mode,
                 int samples, int cap) {
  const auto g = load_graph(file);
  const auto p = flags.params();
  const auto r = is_robust_expander(g, p.nu, p.tau, audit_mode(opt, mode, samples, cap));
  std::string out = r.expander ? (r.inconclusive ? "no refutation found (sampled)\n" : "robust expander\n")
                               : "not a robust expander: S = " + set_text(*r.witness) + "\n";
  emit(opt, robust_report_to_json(r), out);
  return !r.expander ? kFail : r.inconclusive ? kUnknown : kPass;
}

int cmd_classify(const Globals& opt, const std::string& file, const ParamFlags& flags, int cap, bool sampled,
                 int samples) {
  const auto g = load_graph(file);
  ClassifyOptions o;
  o.cap = cap;
  o.require_exact = !sampled;
  o.seed = opt.seed;
  o.samples = samples;
  const auto v = classify(g, flags.params(), o);
  std::string out = std::string(to_string(v.outcome)) + "\n";
  if (v.witness) out += "witness " + set_text(*v.witness) + "\n";
  if (v.outcome == Outcome::robust_expander)
    out += "(" + to_string(v.robust_nu) + ", " + to_string(v.robust_tau) + ")-robust expander" +
           (v.exhaustive ? "" : " (sampled audits)") + "\n";
  for (const auto& line : v.trace) out += "  " + line + "\n";
  emit(opt, classification_to_json(v), out);
  switch (v.outcome) {
    case Outcome::robust_expander: return v.exhaustive ? kPass : kUnknown;
    case Outcome::nu_extremal: return kPass;
    case Outcome::degree_violation: return kFail;
    case Outcome::unresolved: return kUnknown;
  }
  return kUnknown;
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= kMaxVertices) throw std::invalid_argument(item);
      s.insert(v);
    } catch (const std::exception&) {
      throw InvalidArguments("bad vertex '" + item + "' in --witness");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

int cmd_extremal(const Globals& opt, const std::string& file, const ParamFlags& flags,
                 const std::string& witness_text, int cap, std::uint64_t budget) {
  const auto g = load_graph(file);
  const auto p = flags.params();
  VertexSet witness;
  if (!witness_text.empty()) {
    witness = parse_vertex_list(witness_text);
  } else {
    const auto found = nu_extremal_witness(g, p.nu, cap);
    if (!found.witness) throw InvalidArguments("no nu-extremal witness found; pass --witness");
    witness = *found.witness;
  }
  const auto r = extremal_construct_cycle(g, witness, p, budget);
  Json j = verdict_to_json(r.verdict);
  j["trace"] = stitch_to_json(r.trace);
  std::string out;
  if (r.verdict.found()) out = "cycle " + list_text(r.verdict.sequence) + "\n";
  else if (r.construction_failed()) out = "construction failed at step " + r.trace.failed_step + "\n";
  else out = std::string(to_string(r.verdict.outcome)) + "\n";
  out += "  A = " + set_text(r.trace.a_side) + ", B = " + set_text(r.trace.b_side) + ", t = " +
         std::to_string(r.trace.t) + "\n";
  if (!r.trace.path.empty()) out += "  P = " + list_text(r.trace.path) + "\n";
  emit(opt, j, out);
  if (r.verdict.found()) return kPass;
  return r.verdict.outcome == SearchOutcome::unknown ? kUnknown : kFail;
}

int cmd_sweep(const Globals& opt, int n, int k, int max_n_solver, const std::string& report) {
  const auto rows = run_sweep(n, k, max_n_solver, opt.jobs);
  const std::string csv = sweep_csv(rows);
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.certificate_ok && r.hamiltonian != "yes" && r.min_slack >= 0;
  if (!report.empty()) {
    write_file(report, csv);
    Json j;
    j["rows"] = rows.size();
    j["report"] = report;
    j["all_ok"] = all_ok;
    emit(opt, j, "wrote " + std::to_string(rows.size()) + " rows to " + report + "\n");
  } else {
    std::cout << csv;
  }
  return all_ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-degree Hamiltonicity thresholds for k-partite graphs"};
  app.require_subcommand(1);
  Globals opt;
  app.add_flag("--json", opt.json, "emit JSON on stdout");
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled audits")->capture_default_str();

  std::function<int()> run;
  std::string file;
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "graph JSON file")->required(); };

  std::string partition_text, mode_text = "exact";
  auto* phi = app.add_subcommand("phi", "print lambda, mu, f, g, h and Phi for a partition");
  phi->add_option("partition", partition_text, "e.g. 4,4,4")->required();
  phi->add_option("--mode", mode_text, "exact or asymptotic")->capture_default_str();
  phi->callback([&] { run = [&] { return cmd_phi(opt, partition_text, mode_text); }; });

  std::string case_text = "auto", out_path, cert_path;
  int case_index = 0;
  auto* construct = app.add_subcommand("construct", "build a tightness example and its certificate");
  construct->add_option("partition", partition_text, "e.g. 4,4,4")->required();
  construct->add_option("--case", case_text, "auto, f, g, h1 or h2")->capture_default_str();
  construct->add_option("--index", case_index, "i for --case f (default: smallest with f_i = Phi)");
  construct->add_option("-o,--output", out_path, "graph JSON path");
  construct->add_option("--certificate", cert_path, "certificate JSON path (default: <output stem>.cert.json)");
  construct->callback([&] {
    run = [&] { return cmd_construct(opt, partition_text, case_text, case_index, out_path, cert_path); };
  });

  std::optional<std::int64_t> slack;
  std::optional<std::string> gamma_text;
  auto* check = app.add_subcommand("check", "check delta(V_i) >= Phi - n_i + slack");
  add_file(check);
  check->add_option("--slack", slack, "integer slack");
  check->add_option("--gamma", gamma_text, "slack as gamma * n (decimal)");
  check->callback([&] { run = [&] { return cmd_check(opt, file, slack, gamma_text); }; });

  std::uint64_t budget = kDefaultBudget;
  auto* hamilton = app.add_subcommand("hamilton", "search for a Hamiltonian cycle");
  add_file(hamilton);
  hamilton->add_option("--budget", budget, "backtracking node budget above the DP range")->capture_default_str();
  hamilton->callback([&] { run = [&] { return cmd_hamilton(opt, file, budget); }; });

  auto* matching = app.add_subcommand("matching", "perfect fractional matching or an expansion violation");
  add_file(matching);
  matching->callback([&] { run = [&] { return cmd_matching(opt, file); }; });

  int cap = kDefaultAuditCap;
  auto* weak = app.add_subcommand("weak-expansion", "audit |N(S)| >= |S| over independent S");
  add_file(weak);
  weak->add_option("--cap", cap, "largest n audited exhaustively")->capture_default_str();
  weak->callback([&] { run = [&] { return cmd_weak_expansion(opt, file, cap); }; });

  ParamFlags flags;
  std::string audit_text = "exact";
  int samples = 2000;
  int exact_cap = kDefaultExactCap;
  auto* expander = app.add_subcommand("expander", "(nu, tau)-robust expander audit");
  add_file(expander);
  flags.attach(expander, false);
  expander->add_option("--mode", audit_text, "exact or sampled")->capture_default_str();
  expander->add_option("--samples", samples, "subsets drawn in sampled mode")->capture_default_str();
  expander->add_option("--cap", exact_cap, "largest n audited exactly")->capture_default_str();
  expander->callback([&] { run = [&] { return cmd_expander(opt, file, flags, audit_text, samples, exact_cap); }; });

  bool sampled = false;
  auto* classify_cmd = app.add_subcommand("classify", "degree violation, nu-extremal or robust expander");
  add_file(classify_cmd);
  flags.attach(classify_cmd, true);
  classify_cmd->add_option("--cap", exact_cap, "largest n audited exactly")->capture_default_str();
  classify_cmd->add_flag("--sampled", sampled, "sample audits above the cap instead of failing");
  classify_cmd->add_option("--samples", samples, "subsets drawn per sampled audit")->capture_default_str();
  classify_cmd->callback([&] { run = [&] { return cmd_classify(opt, file, flags, exact_cap, sampled, samples); }; });

  std::string witness_text;
  auto* extremal = app.add_subcommand("extremal-cycle", "stitch a Hamiltonian cycle around a nu-extremal set");
  add_file(extremal);
  flags.attach(extremal, true);
  extremal->add_option("--witness", witness_text, "comma-separated vertex ids (default: search)");
  extremal->add_option("--cap", exact_cap, "largest n searched exactly for a witness")->capture_default_str();
  extremal->add_option("--budget", budget, "path search budget")->capture_default_str();
  extremal->callback([&] { run = [&] { return cmd_extremal(opt, file, flags, witness_text, exact_cap, budget); }; });

  int sweep_n = 0, sweep_k = 0, max_n_solver = kDefaultSweepSolverMax;
  std::string report;
  auto* sweep = app.add_subcommand("sweep", "tabulate tightness examples over partitions");
  sweep->add_option("--n", sweep_n, "number of vertices")->required();
  sweep->add_option("--k", sweep_k, "number of parts (default: every k in [2, n])");
  sweep->add_option("--max-n-solver", max_n_solver, "largest n given an exact Hamiltonicity verdict")
      ->capture_default_str();
  sweep->add_option("--report", report, "CSV output path (default: stdout)");
  sweep->callback([&] { run = [&] { return cmd_sweep(opt, sweep_n, sweep_k, max_n_solver, report); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const InvalidArguments& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedPartition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
}
