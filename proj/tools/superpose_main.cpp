// Command-line front end: concurrence of bipartite pure states, superposition
// bound reports, seeded verification campaigns, alpha sweeps and proof
// replays. Structured output (json/csv) is byte-stable for identical
// arguments; the resolved seed is logged on stderr so any run can be replayed.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superpose/bounds.hpp"
#include "superpose/errors.hpp"
#include "superpose/harness.hpp"
#include "superpose/io.hpp"
#include "superpose/states.hpp"

namespace {

using namespace superpose;

struct GlobalOpts {
  std::string format;  // empty = per-subcommand default
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  std::string output_path;
  bool verbose = false;
};

void write_out(const GlobalOpts& g, const std::string& text) {
  if (g.output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(g.output_path);
    if (!out) fail(Errc::parse_error, "cannot open output file: " + g.output_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

std::string pick_format(const GlobalOpts& g, const std::string& fallback) {
  return g.format.empty() ? fallback : g.format;
}

PureState load_state_checked(const GlobalOpts& g, const std::string& path) {
  LoadedState ls = load_state(path);
  if (g.verbose && std::abs(ls.norm_factor - 1.0) > 1e-12) {
    std::cerr << "note: " << path << " normalized by factor " << fmt_g7(ls.norm_factor) << "\n";
  }
  return ls.state;
}

// shapes must match for every pairwise operation; zero-pad the smaller one
std::pair<PureState, PureState> load_pair(const GlobalOpts& g, const std::string& psi_path,
                                          const std::string& phi_path) {
  PureState psi = load_state_checked(g, psi_path);
  PureState phi = load_state_checked(g, phi_path);
  const std::size_t n = std::max(psi.n(), phi.n());
  const std::size_t m = std::max(psi.m(), phi.m());
  if (psi.n() != n || psi.m() != m) psi = pad_to(psi, n, m);
  if (phi.n() != n || phi.m() != m) phi = pad_to(phi, n, m);
  return {std::move(psi), std::move(phi)};
}

std::vector<std::pair<int, int>> parse_dims(const std::string& spec) {
  std::vector<std::pair<int, int>> dims;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto x = token.find('x');
    if (x == std::string::npos) fail(Errc::config_invalid, "dims token is not NxM: " + token);
    try {
      dims.emplace_back(std::stoi(token.substr(0, x)), std::stoi(token.substr(x + 1)));
    } catch (const std::exception&) {
      fail(Errc::config_invalid, "dims token is not NxM: " + token);
    }
  }
  if (dims.empty()) fail(Errc::config_invalid, "dims list is empty");
  return dims;
}

std::array<double, 2> parse_range(const std::string& spec) {
  const auto c = spec.find(':');
  if (c == std::string::npos) fail(Errc::config_invalid, "range is not lo:hi: " + spec);
  try {
    return {std::stod(spec.substr(0, c)), std::stod(spec.substr(c + 1))};
  } catch (const std::exception&) {
    fail(Errc::config_invalid, "range is not lo:hi: " + spec);
  }
}

std::string report_to_json(const BoundReport& r) {
  std::ostringstream out;
  out << "{\"theorem\": \"" << theorem_name(r.theorem) << "\""
      << ", \"actual\": " << fmt_g17(r.actual_concurrence)
      << ", \"lower_individual\": [" << fmt_g17(r.lower_individual[0]) << ", "
      << fmt_g17(r.lower_individual[1]) << "]"
      << ", \"lower_combined\": " << fmt_g17(r.lower_combined)
      << ", \"lower_symmetric\": " << fmt_g17(r.lower_symmetric)
      << ", \"upper_individual\": [" << fmt_g17(r.upper_individual[0]) << ", "
      << fmt_g17(r.upper_individual[1]) << "]"
      << ", \"upper_combined\": " << fmt_g17(r.upper_combined)
      << ", \"upper_symmetric\": " << fmt_g17(r.upper_symmetric)
      << ", \"rank_r\": " << r.rank_r << ", \"norm_sq\": " << fmt_g17(r.norm_sq)
      << ", \"condition\": "
      << (r.condition_flag ? (*r.condition_flag ? "true" : "false") : "null")
      << ", \"lambda_max_psi\": " << fmt_g17(r.lambda_max_psi)
      << ", \"lambda_max_phi\": " << fmt_g17(r.lambda_max_phi)
      << ", \"premise_residual\": " << fmt_g17(r.premise_residual)
      << ", \"forced\": " << (r.forced ? "true" : "false") << "}";
  return out.str();
}

std::string report_to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "theorem          " << theorem_name(r.theorem) << "\n"
      << "actual           " << fmt_g7(r.actual_concurrence) << "\n"
      << "lower individual " << fmt_g7(r.lower_individual[0]) << "  "
      << fmt_g7(r.lower_individual[1]) << "\n"
      << "lower combined   " << fmt_g7(r.lower_combined) << "\n"
      << "lower symmetric  " << fmt_g7(r.lower_symmetric) << "\n"
      << "upper individual " << fmt_g7(r.upper_individual[0]) << "  "
      << fmt_g7(r.upper_individual[1]) << "\n"
      << "upper combined   " << fmt_g7(r.upper_combined) << "\n"
      << "upper symmetric  " << fmt_g7(r.upper_symmetric) << "\n"
      << "rank r           " << r.rank_r << "\n"
      << "norm_sq          " << fmt_g7(r.norm_sq) << "\n"
      << "condition        "
      << (r.condition_flag ? (*r.condition_flag ? "true" : "false") : "n/a") << "\n";
  if (r.forced) {
    out << "warning          premise forced, residual " << fmt_g7(r.premise_residual) << "\n";
  }
  return out.str();
}

int cmd_concurrence(const GlobalOpts& g, const std::string& path) {
  const PureState s = load_state_checked(g, path);
  const double c = concurrence(s);
  const std::string fmt = pick_format(g, "text");
  if (fmt == "json") {
    write_out(g, "{\"concurrence\": " + fmt_g17(c) + "}");
  } else if (fmt == "csv") {
    write_out(g, "concurrence\n" + fmt_g17(c));
  } else {
    write_out(g, "C = " + fmt_g7(c));
  }
  return 0;
}

int cmd_bounds(const GlobalOpts& g, const std::string& psi_path, const std::string& phi_path,
               double alpha_sq, double phase, const std::string& theorem_sel, bool force) {
  const auto [psi, phi] = load_pair(g, psi_path, phi_path);
  const std::complex<double> alpha = std::sqrt(alpha_sq);
  const std::complex<double> beta = std::polar(std::sqrt(1.0 - alpha_sq), phase);
  const SuperpositionInput inp(alpha, beta, psi, phi);

  Theorem th;
  if (theorem_sel == "auto") {
    switch (classify_relation(psi, phi).kind) {
      case Relation::biorthogonal: th = Theorem::t1; break;
      case Relation::trace_orthogonal: th = Theorem::t2; break;
      case Relation::general: th = Theorem::t3; break;
    }
  } else if (theorem_sel == "T1") {
    th = Theorem::t1;
  } else if (theorem_sel == "T2") {
    th = Theorem::t2;
  } else if (theorem_sel == "T3") {
    th = Theorem::t3;
  } else {
    fail(Errc::config_invalid, "unknown theorem selector: " + theorem_sel);
  }

  BoundReport r{};
  switch (th) {
    case Theorem::t1: r = theorem1_bounds(inp, force); break;
    case Theorem::t2: r = theorem2_bounds(inp, force); break;
    case Theorem::t3: r = theorem3_bounds(inp); break;
  }

  const std::string fmt = pick_format(g, "text");
  if (fmt == "json") {
    write_out(g, report_to_json(r));
  } else if (fmt == "csv") {
    TrialRecord rec;
    rec.alpha_sq = alpha_sq;
    rec.n = static_cast<int>(psi.n());
    rec.m = static_cast<int>(psi.m());
    rec.report = r;
    const CampaignKind kind = th == Theorem::t1   ? CampaignKind::t1
                              : th == Theorem::t2 ? CampaignKind::t2
                                                  : CampaignKind::t3;
    write_out(g, trial_csv_header() + "\n" + trial_to_csv(rec, kind));
  } else {
    write_out(g, report_to_text(r));
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& theorem_sel, std::size_t trials,
               const std::string& dims_spec, const std::string& range_spec,
               std::size_t partitions, const std::string& records_path) {
  CampaignConfig cfg;
  if (theorem_sel == "T1") cfg.kind = CampaignKind::t1;
  else if (theorem_sel == "T2") cfg.kind = CampaignKind::t2;
  else if (theorem_sel == "T3") cfg.kind = CampaignKind::t3;
  else if (theorem_sel == "Weyl") cfg.kind = CampaignKind::weyl;
  else fail(Errc::config_invalid, "unknown theorem selector: " + theorem_sel);
  cfg.trials = trials;
  cfg.dims = parse_dims(dims_spec);
  cfg.seed = g.seed;
  cfg.tolerance = g.tolerance;
  cfg.alpha_sq_range = parse_range(range_spec);
  cfg.partitions = partitions;
  if (cfg.tolerance < 0.0) {
    std::cerr << "warning: negative tolerance, every trial will flag a violation\n";
  }

  std::ofstream records;
  RecordSink sink;
  bool jsonl = false;
  if (!records_path.empty()) {
    records.open(records_path);
    if (!records) fail(Errc::parse_error, "cannot open records file: " + records_path);
    jsonl = records_path.size() > 6 &&
            records_path.compare(records_path.size() - 6, 6, ".jsonl") == 0;
    if (!jsonl) records << trial_csv_header() << "\n";
    sink = [&](const TrialRecord& rec) {
      records << (jsonl ? trial_to_jsonl(rec, cfg.kind) : trial_to_csv(rec, cfg.kind)) << "\n";
    };
  }

  const CampaignSummary sum = run_campaign(cfg, sink);
  std::cerr << "seed = " << cfg.seed << ", runtime = " << fmt_g7(sum.runtime_seconds) << " s\n";

  const std::string fmt = pick_format(g, "json");
  if (fmt == "text") {
    std::ostringstream out;
    out << "theorem      " << campaign_kind_name(cfg.kind) << "\n"
        << "trials       " << sum.total << "\n"
        << "violations   " << sum.violations << "\n"
        << "skips        " << sum.degenerate_skips << "\n"
        << "lower gap    max " << fmt_g7(sum.max_lower_gap) << ", mean "
        << fmt_g7(sum.mean_lower_gap) << "\n"
        << "upper gap    min " << fmt_g7(sum.min_upper_gap) << ", mean "
        << fmt_g7(sum.mean_upper_gap) << "\n"
        << "nonzero lower " << sum.nonzero_lower_count << ", condition true "
        << sum.condition_true_count << ", consistency failures "
        << sum.condition_consistency_failures << "\n"
        << "runtime      " << fmt_g7(sum.runtime_seconds) << " s\n";
    write_out(g, out.str());
  } else {
    write_out(g, summary_to_json(cfg, sum));
  }
  return (sum.violations > 0 || sum.condition_consistency_failures > 0) ? 1 : 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& psi_path, const std::string& phi_path,
              std::size_t steps, const std::string& theorem_sel) {
  const auto [psi, phi] = load_pair(g, psi_path, phi_path);
  std::optional<Theorem> th;
  if (theorem_sel == "T1") th = Theorem::t1;
  else if (theorem_sel == "T2") th = Theorem::t2;
  else if (theorem_sel == "T3") th = Theorem::t3;
  else if (theorem_sel != "auto") fail(Errc::config_invalid, "unknown theorem selector: " + theorem_sel);

  const auto rows = sweep_alpha(psi, phi, steps, th);
  const std::string fmt = pick_format(g, "csv");
  std::ostringstream out;
  if (fmt == "json") {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i) out << ", ";
      out << "{\"alpha_sq\": " << fmt_g17(r.alpha_sq)
          << ", \"lower_sym\": " << fmt_g17(r.lower_symmetric)
          << ", \"lower_comb\": " << fmt_g17(r.lower_combined)
          << ", \"actual\": " << fmt_g17(r.actual)
          << ", \"upper_comb\": " << fmt_g17(r.upper_combined)
          << ", \"upper_sym\": " << fmt_g17(r.upper_symmetric) << "}";
    }
    out << "]";
  } else if (fmt == "text") {
    out << "alpha_sq   lower_sym  lower_comb actual     upper_comb upper_sym\n";
    for (const auto& r : rows) {
      out << fmt_g7(r.alpha_sq) << "  " << fmt_g7(r.lower_symmetric) << "  "
          << fmt_g7(r.lower_combined) << "  " << fmt_g7(r.actual) << "  "
          << fmt_g7(r.upper_combined) << "  " << fmt_g7(r.upper_symmetric) << "\n";
    }
  } else {
    out << "alpha_sq,lower_sym,lower_comb,actual,upper_comb,upper_sym\n";
    for (const auto& r : rows) {
      out << fmt_g17(r.alpha_sq) << ',' << fmt_g17(r.lower_symmetric) << ','
          << fmt_g17(r.lower_combined) << ',' << fmt_g17(r.actual) << ','
          << fmt_g17(r.upper_combined) << ',' << fmt_g17(r.upper_symmetric) << "\n";
    }
  }
  write_out(g, out.str());
  return 0;
}

int cmd_replay(const GlobalOpts& g, const std::string& psi_path, const std::string& phi_path,
               double alpha_sq, double phase) {
  const auto [psi, phi] = load_pair(g, psi_path, phi_path);
  const std::complex<double> alpha = std::sqrt(alpha_sq);
  const std::complex<double> beta = std::polar(std::sqrt(1.0 - alpha_sq), phase);

  const Relation rel = classify_relation(psi, phi).kind;
  std::optional<bool> t2;
  if (rel != Relation::general) {
    t2 = derivation_replay_t2(psi, phi, alpha, beta, g.tolerance);
  }
  const ReplayOutcome t3 = derivation_replay_t3(psi, phi, alpha, beta, g.tolerance);
  const char* t3_str = t3 == ReplayOutcome::pass          ? "pass"
                       : t3 == ReplayOutcome::fail        ? "fail"
                                                          : "degenerate_skip";

  const std::string fmt = pick_format(g, "text");
  if (fmt == "json") {
    std::ostringstream out;
    out << "{\"t2\": " << (t2 ? (*t2 ? "true" : "false") : "null") << ", \"t3\": \"" << t3_str
        << "\"}";
    write_out(g, out.str());
  } else {
    std::ostringstream out;
    out << "t2 identity+chains: " << (t2 ? (*t2 ? "pass" : "fail") : "n/a (overlapping states)")
        << "\n"
        << "t3 identity+chain:  " << t3_str << "\n";
    write_out(g, out.str());
  }
  const bool failed = (t2 && !*t2) || t3 == ReplayOutcome::fail;
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concurrence bounds for superposed bipartite pure states"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "campaign seed")->envname("SUPERPOSE_SEED");
  app.add_option("--tolerance", g.tolerance, "numeric tolerance for checks (default 1e-8)");
  app.add_option("--output", g.output_path, "write structured output to this file");
  app.add_flag("-v,--verbose", g.verbose, "log normalization factors and diagnostics");

  auto* c_cmd = app.add_subcommand("concurrence", "concurrence of one state");
  c_cmd->fallthrough();
  std::string state_path;
  c_cmd->add_option("state", state_path, "state json file")->required()->check(CLI::ExistingFile);

  auto* b_cmd = app.add_subcommand("bounds", "bound report for alpha*Psi + beta*Phi");
  b_cmd->fallthrough();
  std::string psi_path, phi_path, theorem_sel = "auto";
  double alpha_sq = 0.5, phase = 0.0;
  bool force = false;
  b_cmd->add_option("psi", psi_path, "state json file")->required()->check(CLI::ExistingFile);
  b_cmd->add_option("phi", phi_path, "state json file")->required()->check(CLI::ExistingFile);
  b_cmd->add_option("--alpha-sq", alpha_sq, "|alpha|^2 in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  b_cmd->add_option("--phase", phase, "relative phase of beta (radians, default 0)");
  b_cmd->add_option("--theorem", theorem_sel, "auto, T1, T2 or T3")
      ->check(CLI::IsMember({"auto", "T1", "T2", "T3"}));
  b_cmd->add_flag("--force", force, "evaluate T1/T2 even when the premise fails");

  auto* v_cmd = app.add_subcommand("verify", "seeded Monte Carlo bound verification");
  v_cmd->fallthrough();
  std::string v_theorem = "T3", dims_spec = "2x2", range_spec = "0:1", records_path;
  std::size_t trials = 1000, partitions = 1;
  v_cmd->add_option("--theorem", v_theorem, "T1, T2, T3 or Weyl")
      ->check(CLI::IsMember({"T1", "T2", "T3", "Weyl"}));
  v_cmd->add_option("--trials", trials, "number of trials");
  v_cmd->add_option("--dims", dims_spec, "comma-separated NxM list, cycled over trials");
  v_cmd->add_option("--alpha-sq-range", range_spec, "|alpha|^2 interval lo:hi");
  v_cmd->add_option("--partitions", partitions, "parallel partitions (summary is identical)");
  v_cmd->add_option("--records", records_path, "stream per-trial records to file (.csv/.jsonl)");

  auto* s_cmd = app.add_subcommand("sweep", "bounds vs |alpha|^2 table");
  s_cmd->fallthrough();
  std::string s_psi, s_phi, s_theorem = "auto";
  std::size_t steps = 11;
  s_cmd->add_option("psi", s_psi, "state json file")->required()->check(CLI::ExistingFile);
  s_cmd->add_option("phi", s_phi, "state json file")->required()->check(CLI::ExistingFile);
  s_cmd->add_option("--steps", steps, "grid points (>= 2)");
  s_cmd->add_option("--theorem", s_theorem, "auto, T1, T2 or T3")
      ->check(CLI::IsMember({"auto", "T1", "T2", "T3"}));

  auto* r_cmd = app.add_subcommand("replay", "replay the proof identities on one instance");
  r_cmd->fallthrough();
  std::string r_psi, r_phi;
  double r_alpha_sq = 0.5, r_phase = 0.0;
  r_cmd->add_option("psi", r_psi, "state json file")->required()->check(CLI::ExistingFile);
  r_cmd->add_option("phi", r_phi, "state json file")->required()->check(CLI::ExistingFile);
  r_cmd->add_option("--alpha-sq", r_alpha_sq, "|alpha|^2 in [0,1]")->check(CLI::Range(0.0, 1.0));
  r_cmd->add_option("--phase", r_phase, "relative phase of beta (radians)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_cmd) return cmd_concurrence(g, state_path);
    if (*b_cmd) return cmd_bounds(g, psi_path, phi_path, alpha_sq, phase, theorem_sel, force);
    if (*v_cmd) return cmd_verify(g, v_theorem, trials, dims_spec, range_spec, partitions,
                                  records_path);
    if (*s_cmd) return cmd_sweep(g, s_psi, s_phi, steps, s_theorem);
    if (*r_cmd) return cmd_replay(g, r_psi, r_phi, r_alpha_sq, r_phase);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
