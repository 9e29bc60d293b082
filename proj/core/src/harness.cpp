#include "sepstates/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace sepstates {

Target target_from_name(const std::string& name) {
  if (name == "thm1") return Target::Thm1;
  if (name == "thm2") return Target::Thm2;
  if (name == "lemma1") return Target::Lemma1;
  if (name == "pmax-consistency") return Target::PmaxConsistency;
  if (name == "monotone") return Target::Monotone;
  throw invalid_input("unknown verification target: " + name);
}

std::string target_name(Target t) {
  switch (t) {
    case Target::Thm1: return "thm1";
    case Target::Thm2: return "thm2";
    case Target::Lemma1: return "lemma1";
    case Target::PmaxConsistency: return "pmax-consistency";
    case Target::Monotone: return "monotone";
  }
  throw internal_error("unreachable");
}

void CampaignConfig::validate() const {
  if (instances < 1) throw invalid_input("campaign: instances must be >= 1");
  if (dim_a_min < 2 || dim_a_max < dim_a_min || dim_b_min < 2 ||
      dim_b_max < dim_b_min) {
    throw invalid_input("campaign: empty or degenerate dimension range");
  }
  if (rounds_min < 1 || rounds_max < rounds_min) {
    throw invalid_input("campaign: empty rounds range");
  }
  if (kraus_max < 1) throw invalid_input("campaign: kraus budget must be >= 1");
  if (workers < 1) throw invalid_input("campaign: workers must be >= 1");
}

namespace {

// N biased toward small values, capped.
int geometric_count(Rng& rng, int cap) {
  int n = 1;
  while (n < cap && rng.uniform() < 0.5) ++n;
  return n;
}

ProductKrausSet draw_locc_op(const CampaignConfig& cfg, int da, int db,
                             Rng& rng) {
  int rounds = rng.uniform_int(cfg.rounds_min, cfg.rounds_max);
  const int outcomes = 2;
  while (rounds > 1 && std::pow(2.0, rounds) > cfg.kraus_max) --rounds;
  return gen_separable_locc(da, db, rounds, outcomes, rng);
}

InstanceResult run_thm1(const CampaignConfig& cfg, std::uint64_t seed,
                        bool record, bool monotone_mode) {
  Rng rng(seed);
  const int da = rng.uniform_int(cfg.dim_a_min, cfg.dim_a_max);
  const int db = rng.uniform_int(cfg.dim_b_min, cfg.dim_b_max);
  const ProductKrausSet op = draw_locc_op(cfg, da, db, rng);
  const PureState s = random_pure_state(da, db, rng);
  const Ensemble ens = apply_to_pure(op, s);

  InstanceResult res;
  res.seed = seed;
  if (monotone_mode) {
    const MonotoneResult mono =
        check_average_monotone(s, ens, Monotone::Entropy);
    res.min_slack = mono.deficit;
    res.ok = mono.holds;
  } else {
    const MajorizationReport rep = check_ensemble_majorization(s, ens, cfg.tolerance);
    res.min_slack = rep.min_slack;
    res.worst_n = rep.worst_n;
    res.ok = rep.verdict;
    if (record) res.inputs["report"] = majorization_report_to_json(rep);
  }
  if (record) {
    res.inputs["state"] = state_to_json(s);
    res.inputs["operation"] = operation_to_json(op);
  }
  return res;
}

InstanceResult run_thm2(const CampaignConfig& cfg, std::uint64_t seed,
                        bool record) {
  Rng rng(seed);
  const int d = rng.uniform_int(cfg.dim_a_min, cfg.dim_a_max);
  const int n_ops = geometric_count(rng, cfg.kraus_max);
  const std::vector<KrausPair> pairs =
      gen_random_product_collection(d, d, n_ops, 1.0 / std::sqrt(d), rng);
  const PureState s = random_pure_state(d, d, rng);
  const Theorem2Report rep = verify_theorem2(pairs, s);

  InstanceResult res;
  res.seed = seed;
  res.min_slack = rep.min_slack;
  res.worst_n = rep.worst_n;
  res.ok = rep.holds;
  if (record) {
    res.inputs["state"] = state_to_json(s);
    res.inputs["operation"] = operation_to_json({pairs});
    res.inputs["lhs"] = rep.lhs;
    res.inputs["rhs"] = rep.rhs;
  }
  return res;
}

InstanceResult run_lemma1(const CampaignConfig& cfg, std::uint64_t seed,
                          bool record) {
  Rng rng(seed);
  const int d_hi = std::min(cfg.dim_a_max, 5);
  const int d = rng.uniform_int(std::min(cfg.dim_a_min, d_hi), d_hi);
  RVec diag(d);
  for (int i = 0; i < d; ++i) diag(i) = rng.uniform();
  std::sort(diag.begin(), diag.end());
  diag /= diag.sum();
  const int n = rng.uniform_int(1, d);
  const CMat a = ginibre(d, d, 1.0 / std::sqrt(d), rng);
  const CMat b = ginibre(d, d, 1.0 / std::sqrt(d), rng);
  const Lemma1Report rep = verify_lemma1(a, b, diag, n);

  InstanceResult res;
  res.seed = seed;
  res.worst_n = n;
  res.min_slack = std::min(rep.chain - rep.lhs, rep.rhs - rep.chain) /
                  std::max(1.0, rep.rhs);
  res.ok = rep.holds;
  if (record) {
    res.inputs["a"] = matrix_to_json(a);
    res.inputs["b"] = matrix_to_json(b);
    res.inputs["psi_diag"] = std::vector<double>(diag.begin(), diag.end());
    res.inputs["n"] = n;
    res.inputs["lhs"] = rep.lhs;
    res.inputs["chain"] = rep.chain;
    res.inputs["rhs"] = rep.rhs;
    res.inputs["projector_idempotency"] = rep.projector_idempotency;
    res.inputs["projector_rank"] = rep.projector_rank;
    res.inputs["annihilation"] = rep.annihilation;
  }
  return res;
}

// Feasibility of {(p, target), (1-p, rank-1 residual)} per the majorization
// check; used as an independent route to the optimal probability.
bool split_feasible(const PureState& source, const PureState& target, double p) {
  Ensemble ens;
  const PureState residual =
      state_from_schmidt(RVec::Ones(1), target.dim_a, target.dim_b);
  if (p > 0.0) ens.outcomes.emplace_back(p, target);
  if (p < 1.0) ens.outcomes.emplace_back(1.0 - p, residual);
  return check_ensemble_majorization(source, ens).verdict;
}

InstanceResult run_pmax(const CampaignConfig& cfg, std::uint64_t seed,
                        bool record) {
  Rng rng(seed);
  const int d_hi = std::min(cfg.dim_a_max, 3);
  const int d = rng.uniform_int(std::min(cfg.dim_a_min, d_hi), d_hi);
  const PureState source = random_pure_state(d, d, rng);
  const PureState target = random_pure_state(d, d, rng);

  const double p_closed = pmax_sep(source, target);
  double lo = 0.0, hi = 1.0;
  if (split_feasible(source, target, 1.0)) {
    lo = 1.0;
  } else {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (split_feasible(source, target, mid) ? lo : hi) = mid;
    }
  }
  const double diff = std::abs(p_closed - lo);
  const DeterministicResult det = can_transform_deterministic(source, target);
  const bool equiv = det.feasible == (p_closed >= 1.0 - tol::inequality);

  InstanceResult res;
  res.seed = seed;
  res.min_slack = 1e-6 - diff;
  res.ok = diff <= 1e-6 && equiv;
  if (record) {
    res.inputs["source"] = state_to_json(source);
    res.inputs["target"] = state_to_json(target);
    res.inputs["pmax"] = p_closed;
    res.inputs["pmax_bisection"] = lo;
    res.inputs["deterministic_feasible"] = det.feasible;
  }
  return res;
}

}  // namespace

InstanceResult run_instance(const CampaignConfig& cfg, std::uint64_t seed,
                            bool record_inputs) {
  switch (cfg.target) {
    case Target::Thm1: return run_thm1(cfg, seed, record_inputs, false);
    case Target::Monotone: return run_thm1(cfg, seed, record_inputs, true);
    case Target::Thm2: return run_thm2(cfg, seed, record_inputs);
    case Target::Lemma1: return run_lemma1(cfg, seed, record_inputs);
    case Target::PmaxConsistency: return run_pmax(cfg, seed, record_inputs);
  }
  throw internal_error("unreachable");
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<InstanceResult> results(cfg.instances);
  auto work = [&](int worker) {
    for (int i = worker; i < cfg.instances; i += cfg.workers) {
      results[i] = run_instance(cfg, mix_seed(cfg.master_seed, i), false);
    }
  };
  if (cfg.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  CampaignReport rep;
  rep.config = cfg;
  rep.instances_run = cfg.instances;
  std::vector<double> slacks;
  slacks.reserve(cfg.instances);
  for (const InstanceResult& r : results) {
    slacks.push_back(r.min_slack);
    if (!r.ok) {
      // Re-run deterministically to capture the full instance for replay.
      rep.violations.push_back(run_instance(cfg, r.seed, true));
    }
  }
  std::sort(slacks.begin(), slacks.end());
  auto quantile = [&](double q) {
    const auto idx = static_cast<std::size_t>(q * (slacks.size() - 1));
    return slacks[idx];
  };
  rep.slack_min = slacks.front();
  rep.slack_q25 = quantile(0.25);
  rep.slack_median = quantile(0.5);
  rep.slack_q75 = quantile(0.75);
  rep.slack_max = slacks.back();
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

Json replay(const CampaignConfig& cfg, std::uint64_t seed) {
  const InstanceResult res = run_instance(cfg, seed, true);
  Json j;
  j["target"] = target_name(cfg.target);
  j["seed"] = res.seed;
  j["ok"] = res.ok;
  j["min_slack"] = res.min_slack;
  j["worst_n"] = res.worst_n;
  j["instance"] = res.inputs;
  return j;
}

Json campaign_report_to_json(const CampaignReport& rep) {
  Json j;
  j["target"] = target_name(rep.config.target);
  j["instances"] = rep.instances_run;
  j["master_seed"] = rep.config.master_seed;
  j["config"] = {{"dim_a", {rep.config.dim_a_min, rep.config.dim_a_max}},
                 {"dim_b", {rep.config.dim_b_min, rep.config.dim_b_max}},
                 {"kraus_max", rep.config.kraus_max},
                 {"rounds", {rep.config.rounds_min, rep.config.rounds_max}},
                 {"tolerance", rep.config.tolerance}};
  Json viols = Json::array();
  for (const InstanceResult& v : rep.violations) {
    Json vj;
    vj["seed"] = v.seed;
    vj["worst_n"] = v.worst_n;
    vj["slack"] = v.min_slack;
    vj["inputs"] = v.inputs;
    viols.push_back(std::move(vj));
  }
  j["violations"] = std::move(viols);
  j["slack"] = {{"min", rep.slack_min},
                {"q25", rep.slack_q25},
                {"median", rep.slack_median},
                {"q75", rep.slack_q75},
                {"max", rep.slack_max}};
  return j;
}

}  // namespace sepstates
