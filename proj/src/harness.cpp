#include "superpose/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "superpose/errors.hpp"
#include "superpose/generators.hpp"
#include "superpose/io.hpp"
#include "superpose/linalg.hpp"
#include "superpose/rng.hpp"

namespace superpose {

namespace {

constexpr std::uint64_t kStreamWeyl = 6;

struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// per-trial result slot; the summary is a deterministic fold over these
struct TrialSlot {
  double lower_gap = 0.0;
  double upper_gap = 0.0;
  double margin = 0.0;
  BoundKind which = BoundKind::none;
  bool has_bounds = false;
  bool nonzero_lower = false;
  bool condition_present = false;
  bool condition_true = false;
  bool skip = false;
};

void validate(const CampaignConfig& cfg) {
  if (cfg.trials < 1) fail(Errc::config_invalid, "campaign: trials must be >= 1");
  if (cfg.dims.empty()) fail(Errc::config_invalid, "campaign: dims must be nonempty");
  for (auto [n, m] : cfg.dims) {
    if (n < 1 || m < 1) fail(Errc::config_invalid, "campaign: dims must be >= 1");
    if (cfg.kind == CampaignKind::t1 && m < 2) {
      fail(Errc::config_invalid, "campaign: biorthogonal pairs need m >= 2");
    }
  }
  if (!std::isfinite(cfg.tolerance) || cfg.tolerance == 0.0) {
    fail(Errc::config_invalid, "campaign: tolerance must be finite and nonzero");
  }
  const auto [lo, hi] = cfg.alpha_sq_range;
  if (!(lo >= 0.0) || !(hi <= 1.0) || lo > hi) {
    fail(Errc::config_invalid, "campaign: alpha_sq_range must be within [0, 1]");
  }
  if (cfg.partitions < 1) fail(Errc::config_invalid, "campaign: partitions must be >= 1");
}

Violation worst_violation(const BoundReport& r, double tol) {
  Violation v;
  const auto consider = [&](BoundKind kind, double margin) {
    if (margin > tol && margin - tol > v.margin) {
      v.which = kind;
      v.margin = margin - tol;
    }
  };
  consider(BoundKind::lower_symmetric, r.lower_symmetric - r.lower_combined);
  consider(BoundKind::lower_combined, r.lower_combined - r.actual_concurrence);
  consider(BoundKind::upper_combined, r.actual_concurrence - r.upper_combined);
  consider(BoundKind::upper_symmetric, r.upper_combined - r.upper_symmetric);
  return v;
}

TrialRecord run_trial(const CampaignConfig& cfg, std::size_t t) {
  TrialRecord rec;
  rec.trial_index = t;
  const auto [n, m] = cfg.dims[t % cfg.dims.size()];
  rec.n = n;
  rec.m = m;

  const std::uint64_t trial_seed = derive_seed(cfg.seed, t);

  if (cfg.kind == CampaignKind::weyl) {
    auto rng = SplitMix64::stream(trial_seed, kStreamWeyl);
    const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(n), rng);
    const ComplexMatrix k = random_hermitian(static_cast<std::size_t>(n), rng);
    const double margin = weyl_margin(h, k);
    if (margin > cfg.tolerance) {
      rec.violation = Violation{BoundKind::weyl, margin - cfg.tolerance};
    }
    return rec;
  }

  GeneratorConfig gc;
  gc.seed = trial_seed;
  gc.n = static_cast<std::size_t>(n);
  gc.m = static_cast<std::size_t>(m);
  gc.alpha_sq_range = cfg.alpha_sq_range;

  const auto [alpha, beta] = random_amplitudes(gc);
  rec.alpha_sq = std::norm(alpha);

  try {
    BoundReport report{};
    switch (cfg.kind) {
      case CampaignKind::t1: {
        auto [psi, phi] = biorthogonal_pair(gc);
        report = theorem1_bounds(SuperpositionInput(alpha, beta, psi, phi));
        break;
      }
      case CampaignKind::t2: {
        auto [psi, phi] = orthogonal_pair(gc);
        report = theorem2_bounds(SuperpositionInput(alpha, beta, psi, phi));
        break;
      }
      case CampaignKind::t3: {
        GeneratorConfig ga = gc, gb = gc;
        ga.seed = derive_seed(trial_seed, 1);
        gb.seed = derive_seed(trial_seed, 2);
        report = theorem3_bounds(SuperpositionInput(alpha, beta, haar_state(ga), haar_state(gb)));
        break;
      }
      case CampaignKind::weyl:
        break;  // handled above
    }
    const Violation v = worst_violation(report, cfg.tolerance);
    if (v.which != BoundKind::none) rec.violation = v;
    rec.report = std::move(report);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_superposition) throw;
    rec.degenerate_skip = true;
  }
  return rec;
}

TrialSlot slot_of(const TrialRecord& rec, double tol) {
  TrialSlot s;
  s.skip = rec.degenerate_skip;
  if (rec.violation) {
    s.which = rec.violation->which;
    s.margin = rec.violation->margin;
  }
  if (rec.report) {
    const BoundReport& r = *rec.report;
    s.has_bounds = true;
    s.lower_gap = r.actual_concurrence - r.lower_combined;
    s.upper_gap = r.upper_combined - r.actual_concurrence;
    s.nonzero_lower = r.lower_combined > tol;
    s.condition_present = r.condition_flag.has_value();
    s.condition_true = r.condition_flag.value_or(false);
  }
  return s;
}

CampaignSummary fold(const std::vector<TrialSlot>& slots) {
  CampaignSummary sum;
  sum.total = slots.size();
  KahanSum lower_gaps, upper_gaps;
  std::size_t bound_trials = 0;
  double max_lower = -std::numeric_limits<double>::infinity();
  double min_upper = std::numeric_limits<double>::infinity();
  for (const TrialSlot& s : slots) {
    if (s.which != BoundKind::none) ++sum.violations;
    if (s.skip) ++sum.degenerate_skips;
    if (!s.has_bounds) continue;
    ++bound_trials;
    lower_gaps.add(s.lower_gap);
    upper_gaps.add(s.upper_gap);
    max_lower = std::max(max_lower, s.lower_gap);
    min_upper = std::min(min_upper, s.upper_gap);
    if (s.nonzero_lower) ++sum.nonzero_lower_count;
    if (s.condition_present && s.condition_true) ++sum.condition_true_count;
    if (s.nonzero_lower && s.condition_present && !s.condition_true) {
      ++sum.condition_consistency_failures;
    }
  }
  if (bound_trials > 0) {
    sum.max_lower_gap = max_lower;
    sum.min_upper_gap = min_upper;
    sum.mean_lower_gap = lower_gaps.sum / static_cast<double>(bound_trials);
    sum.mean_upper_gap = upper_gaps.sum / static_cast<double>(bound_trials);
  }
  return sum;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg, const RecordSink& sink) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<TrialSlot> slots(cfg.trials);
  if (sink || cfg.partitions == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const TrialRecord rec = run_trial(cfg, t);
      slots[t] = slot_of(rec, cfg.tolerance);
      if (sink) sink(rec);
    }
  } else {
    const std::size_t parts = std::min(cfg.partitions, cfg.trials);
    std::vector<std::thread> workers;
    workers.reserve(parts);
    std::vector<std::exception_ptr> errors(parts);
    for (std::size_t p = 0; p < parts; ++p) {
      workers.emplace_back([&, p] {
        const std::size_t begin = p * cfg.trials / parts;
        const std::size_t end = (p + 1) * cfg.trials / parts;
        try {
          for (std::size_t t = begin; t < end; ++t) {
            slots[t] = slot_of(run_trial(cfg, t), cfg.tolerance);
          }
        } catch (...) {
          errors[p] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CampaignSummary sum = fold(slots);
  sum.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

CampaignSummary tightness_report(const std::vector<TrialRecord>& records, double tolerance) {
  if (records.empty()) fail(Errc::empty_stream, "tightness_report: empty record stream");
  std::vector<TrialSlot> slots;
  slots.reserve(records.size());
  for (const TrialRecord& r : records) slots.push_back(slot_of(r, tolerance));
  return fold(slots);
}

std::vector<SweepRow> sweep_alpha(const PureState& psi, const PureState& phi, std::size_t steps,
                                  std::optional<Theorem> theorem) {
  if (steps < 2) fail(Errc::config_invalid, "sweep_alpha: steps must be >= 2");
  Theorem th;
  if (theorem) {
    th = *theorem;
  } else {
    switch (classify_relation(psi, phi).kind) {
      case Relation::biorthogonal: th = Theorem::t1; break;
      case Relation::trace_orthogonal: th = Theorem::t2; break;
      case Relation::general: th = Theorem::t3; break;
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double a_sq = static_cast<double>(k) / static_cast<double>(steps - 1);
    const SuperpositionInput inp(std::sqrt(a_sq), std::sqrt(1.0 - a_sq), psi, phi);
    BoundReport r{};
    switch (th) {
      case Theorem::t1: r = theorem1_bounds(inp); break;
      case Theorem::t2: r = theorem2_bounds(inp); break;
      case Theorem::t3: r = theorem3_bounds(inp); break;
    }
    rows.push_back({a_sq, r.lower_symmetric, r.lower_combined, r.actual_concurrence,
                    r.upper_combined, r.upper_symmetric});
  }
  return rows;
}

namespace {

bool eig_chain_holds(const std::vector<double>& gamma_half, const std::vector<double>& anchor,
                     double other_max, double anchor_weight, double other_weight, double tol) {
  for (std::size_t i = 0; i < gamma_half.size(); ++i) {
    if (gamma_half[i] > anchor_weight * anchor[i] + other_weight * other_max + tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool derivation_replay_t2(const PureState& psi, const PureState& phi, std::complex<double> alpha,
                          std::complex<double> beta, double tol) {
  const double overlap = std::abs(frobenius_inner(psi.matrix(), phi.matrix()));
  if (overlap > 1e-8) {
    fail(Errc::relation_violation, "derivation_replay_t2: |Tr Psi Phi†| exceeds 1e-8");
  }
  const double a_sq = std::norm(alpha);
  const double b_sq = std::norm(beta);

  const ComplexMatrix d = linear_combination(a_sq, gram(psi.matrix()), b_sq, gram(phi.matrix()));
  const ComplexMatrix gp = linear_combination(alpha, psi.matrix(), beta, phi.matrix());
  const ComplexMatrix gm = linear_combination(alpha, psi.matrix(), -beta, phi.matrix());

  const ComplexMatrix half_sum = linear_combination(0.5, gram(gp), 0.5, gram(gm));
  const double residual = frobenius_norm(linear_combination(1.0, d, -1.0, half_sum));
  if (residual > tol) return false;

  const auto lam_psi = hermitian_eig_psd(gram(psi.matrix())).eigenvalues;
  const auto lam_phi = hermitian_eig_psd(gram(phi.matrix())).eigenvalues;
  auto lam_gp = hermitian_eig_psd(gram(gp)).eigenvalues;
  for (double& x : lam_gp) x *= 0.5;

  return eig_chain_holds(lam_gp, lam_psi, lam_phi.back(), a_sq, b_sq, tol) &&
         eig_chain_holds(lam_gp, lam_phi, lam_psi.back(), b_sq, a_sq, tol);
}

ReplayOutcome derivation_replay_t3(const PureState& psi, const PureState& phi,
                                   std::complex<double> alpha, std::complex<double> beta,
                                   double tol) {
  const double a_sq = std::norm(alpha);
  const double b_sq = std::norm(beta);

  const ComplexMatrix gp = linear_combination(alpha, psi.matrix(), beta, phi.matrix());
  const ComplexMatrix gm = linear_combination(alpha, psi.matrix(), -beta, phi.matrix());
  const double nsp = frobenius_norm_sq(gp);
  const double nsm = frobenius_norm_sq(gm);
  if (nsp < 1e-12 || nsm < 1e-12) return ReplayOutcome::degenerate_skip;

  const ComplexMatrix gp_n = scaled(gp, 1.0 / std::sqrt(nsp));
  const ComplexMatrix gm_n = scaled(gm, 1.0 / std::sqrt(nsm));

  const ComplexMatrix d = linear_combination(a_sq, gram(psi.matrix()), b_sq, gram(phi.matrix()));
  const ComplexMatrix weighted =
      linear_combination(0.5 * nsp, gram(gp_n), 0.5 * nsm, gram(gm_n));
  const double residual = frobenius_norm(linear_combination(1.0, d, -1.0, weighted));
  if (residual > tol) return ReplayOutcome::fail;

  const auto lam_psi = hermitian_eig_psd(gram(psi.matrix())).eigenvalues;
  const auto lam_phi = hermitian_eig_psd(gram(phi.matrix())).eigenvalues;
  auto lam_gp = hermitian_eig_psd(gram(gp_n)).eigenvalues;
  for (double& x : lam_gp) x *= 0.5 * nsp;

  return eig_chain_holds(lam_gp, lam_psi, lam_phi.back(), a_sq, b_sq, tol)
             ? ReplayOutcome::pass
             : ReplayOutcome::fail;
}

// --- structured output ---

std::string campaign_kind_name(CampaignKind k) {
  switch (k) {
    case CampaignKind::t1: return "T1";
    case CampaignKind::t2: return "T2";
    case CampaignKind::t3: return "T3";
    case CampaignKind::weyl: return "Weyl";
  }
  return "?";
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t1: return "T1";
    case Theorem::t2: return "T2";
    case Theorem::t3: return "T3";
  }
  return "?";
}

std::string trial_csv_header() {
  return "trial_index,n,m,alpha_sq,theorem,actual,lower_sym,lower_comb,upper_comb,upper_sym,"
         "rank_r,norm_sq,condition,violation_margin";
}

namespace {

std::string condition_str(const TrialRecord& r) {
  if (!r.report || !r.report->condition_flag.has_value()) return "na";
  return *r.report->condition_flag ? "1" : "0";
}

}  // namespace

std::string trial_to_csv(const TrialRecord& r, CampaignKind kind) {
  std::ostringstream out;
  const BoundReport empty{};
  const BoundReport& b = r.report ? *r.report : empty;
  out << r.trial_index << ',' << r.n << ',' << r.m << ',' << fmt_g17(r.alpha_sq) << ','
      << campaign_kind_name(kind) << ',' << fmt_g17(b.actual_concurrence) << ','
      << fmt_g17(b.lower_symmetric) << ',' << fmt_g17(b.lower_combined) << ','
      << fmt_g17(b.upper_combined) << ',' << fmt_g17(b.upper_symmetric) << ',' << b.rank_r << ','
      << fmt_g17(b.norm_sq) << ',' << condition_str(r) << ','
      << fmt_g17(r.violation ? r.violation->margin : 0.0);
  return out.str();
}

std::string trial_to_jsonl(const TrialRecord& r, CampaignKind kind) {
  std::ostringstream out;
  const BoundReport empty{};
  const BoundReport& b = r.report ? *r.report : empty;
  out << "{\"trial_index\": " << r.trial_index << ", \"n\": " << r.n << ", \"m\": " << r.m
      << ", \"alpha_sq\": " << fmt_g17(r.alpha_sq) << ", \"theorem\": \""
      << campaign_kind_name(kind) << "\", \"actual\": " << fmt_g17(b.actual_concurrence)
      << ", \"lower_sym\": " << fmt_g17(b.lower_symmetric)
      << ", \"lower_comb\": " << fmt_g17(b.lower_combined)
      << ", \"upper_comb\": " << fmt_g17(b.upper_combined)
      << ", \"upper_sym\": " << fmt_g17(b.upper_symmetric) << ", \"rank_r\": " << b.rank_r
      << ", \"norm_sq\": " << fmt_g17(b.norm_sq) << ", \"condition\": \"" << condition_str(r)
      << "\", \"violation_margin\": " << fmt_g17(r.violation ? r.violation->margin : 0.0) << "}";
  return out.str();
}

std::string summary_to_json(const CampaignConfig& cfg, const CampaignSummary& s) {
  std::ostringstream out;
  out << "{\"theorem\": \"" << campaign_kind_name(cfg.kind) << "\", \"trials\": " << cfg.trials
      << ", \"dims\": \"";
  for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
    if (i) out << ',';
    out << cfg.dims[i].first << 'x' << cfg.dims[i].second;
  }
  out << "\", \"seed\": " << cfg.seed << ", \"tolerance\": " << fmt_g17(cfg.tolerance)
      << ", \"alpha_sq_range\": [" << fmt_g17(cfg.alpha_sq_range[0]) << ", "
      << fmt_g17(cfg.alpha_sq_range[1]) << "]"
      << ", \"total\": " << s.total << ", \"violations\": " << s.violations
      << ", \"max_lower_gap\": " << fmt_g17(s.max_lower_gap)
      << ", \"min_upper_gap\": " << fmt_g17(s.min_upper_gap)
      << ", \"mean_lower_gap\": " << fmt_g17(s.mean_lower_gap)
      << ", \"mean_upper_gap\": " << fmt_g17(s.mean_upper_gap)
      << ", \"nonzero_lower_count\": " << s.nonzero_lower_count
      << ", \"condition_true_count\": " << s.condition_true_count
      << ", \"condition_consistency_failures\": " << s.condition_consistency_failures
      << ", \"degenerate_skips\": " << s.degenerate_skips << "}";
  return out.str();
}

}  // namespace superpose
