// Command-line front end: schmidt / apply / feasible / verify / gen.
// Exit codes: 0 success or feasible, 1 infeasible or violations found,
// 2 usage or data error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "sepstates/harness.hpp"

namespace ss = sepstates;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

void emit(const ss::Json& j, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    ss::save_json_file(json_out, j);
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed,
                           bool machine_mode) {
  if (seed) return *seed;
  if (machine_mode) {
    throw ss::invalid_input("--seed is required with --json-out");
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

void parse_dim_range(const std::string& text, int& lo, int& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    lo = hi = std::stoi(text);
  } else {
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
  }
  if (lo < 2 || hi < lo) throw ss::invalid_input("bad dimension range: " + text);
}

int cmd_schmidt(const std::string& state_path) {
  const ss::PureState s = ss::state_from_json(ss::load_json_file(state_path));
  const ss::RVec w = ss::schmidt_decompose(s).weights;
  const ss::RVec e = ss::e_n_from_weights(w);
  ss::Json j;
  j["weights"] = std::vector<double>(w.begin(), w.end());
  j["e_n"] = std::vector<double>(e.begin(), e.end());
  std::cout << j.dump(2) << '\n';
  return kExitFeasible;
}

int cmd_apply(const std::string& op_path, const std::string& state_path,
              double prune_tol) {
  const ss::ProductKrausSet op =
      ss::operation_from_json(ss::load_json_file(op_path));
  if (!op.closure_checked) {
    throw ss::invalid_input("operation not separable-closed (residual " +
                            std::to_string(op.closure_residual) + ")");
  }
  const ss::PureState s = ss::state_from_json(ss::load_json_file(state_path));
  const ss::Ensemble ens = ss::apply_to_pure(op, s, prune_tol);
  std::cout << ss::ensemble_to_json(ens).dump(2) << '\n';
  return kExitFeasible;
}

int cmd_feasible(const std::string& source_path, const std::string& other_path,
                 bool want_pmax) {
  const ss::PureState source =
      ss::state_from_json(ss::load_json_file(source_path));
  const ss::Json other = ss::load_json_file(other_path);

  ss::Json out;
  bool feasible = false;
  if (other.contains("outcomes")) {
    const ss::Ensemble ens = ss::ensemble_from_json(other);
    const ss::MajorizationReport rep =
        ss::check_ensemble_majorization(source, ens);
    out = ss::majorization_report_to_json(rep);
    feasible = rep.verdict;
    if (want_pmax) {
      throw ss::invalid_input("--pmax needs a target state, not an ensemble");
    }
  } else {
    const ss::PureState target = ss::state_from_json(other);
    ss::Ensemble singleton;
    singleton.outcomes.emplace_back(1.0, target);
    const ss::MajorizationReport rep =
        ss::check_ensemble_majorization(source, singleton);
    out = ss::majorization_report_to_json(rep);
    feasible = rep.verdict;
    if (want_pmax) out["p_max"] = ss::pmax_sep(source, target);
  }
  std::cout << out.dump(2) << '\n';
  return feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_verify(const std::string& target, int instances,
               const std::optional<std::uint64_t>& seed,
               const std::string& dims, const std::string& json_out,
               int workers, const std::optional<std::uint64_t>& replay_seed) {
  ss::CampaignConfig cfg;
  cfg.target = ss::target_from_name(target);
  cfg.instances = instances;
  cfg.workers = workers;
  if (!dims.empty()) {
    parse_dim_range(dims, cfg.dim_a_min, cfg.dim_a_max);
    cfg.dim_b_min = cfg.dim_a_min;
    cfg.dim_b_max = cfg.dim_a_max;
  }
  if (replay_seed) {
    emit(ss::replay(cfg, *replay_seed), json_out);
    return kExitFeasible;
  }
  cfg.master_seed = resolve_seed(seed, !json_out.empty());
  const ss::CampaignReport rep = ss::run_campaign(cfg);
  emit(ss::campaign_report_to_json(rep), json_out);
  std::cerr << "campaign " << target << ": " << rep.instances_run
            << " instances, " << rep.violations.size() << " violations, "
            << rep.wall_ms << " ms\n";
  return rep.violations.empty() ? kExitFeasible : kExitInfeasible;
}

ss::RVec parse_weights(const std::string& text) {
  std::vector<double> vals;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) vals.push_back(std::stod(item));
  if (vals.empty()) throw ss::invalid_input("empty --schmidt list");
  ss::RVec w(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) w(i) = vals[i];
  const double total = w.sum();
  if (total <= 0.0) throw ss::invalid_input("--schmidt weights must sum > 0");
  if (std::abs(total - 1.0) > 1e-12) {
    std::cerr << "warning: Schmidt weights sum to " << total
              << "; normalizing\n";
    w /= total;
  }
  return w;
}

int cmd_gen(const std::string& kind, std::vector<int> dims,
            const std::string& schmidt, int rounds, int outcomes,
            const std::optional<std::uint64_t>& seed_opt,
            const std::string& out_path) {
  if (dims.size() != 2) throw ss::invalid_input("--dims needs two values");
  ss::Json j;
  if (kind == "state") {
    if (!schmidt.empty()) {
      const ss::RVec w = parse_weights(schmidt);
      const int d = static_cast<int>(w.size());
      if (d > std::min(dims[0], dims[1])) dims = {d, d};
      j = ss::state_to_json(ss::state_from_schmidt(w, dims[0], dims[1]));
    } else {
      ss::Rng rng(resolve_seed(seed_opt, false));
      j = ss::state_to_json(ss::random_pure_state(dims[0], dims[1], rng));
    }
  } else if (kind == "sepop") {
    ss::Rng rng(resolve_seed(seed_opt, false));
    j = ss::operation_to_json(
        ss::gen_separable_locc(dims[0], dims[1], rounds, outcomes, rng));
  } else {
    throw ss::invalid_input("gen kind must be 'state' or 'sepop'");
  }
  emit(j, out_path);
  return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable-operation feasibility toolkit for bipartite pure states"};
  app.require_subcommand(1);

  std::string state_path, op_path, other_path, target, dims_text, json_out,
      out_path, gen_kind, schmidt_text;
  double prune_tol = ss::tol::prune;
  bool want_pmax = false;
  int instances = 1000, workers = 1, rounds = 1, outcomes = 2;
  std::optional<std::uint64_t> seed, replay_seed;
  std::vector<int> gen_dims{2, 2};

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt weights and E_n of a state");
  schmidt->add_option("state", state_path, "state JSON file")->required();

  auto* apply = app.add_subcommand("apply", "Apply a separable operation to a state");
  apply->add_option("operation", op_path, "operation JSON file")->required();
  apply->add_option("state", state_path, "state JSON file")->required();
  apply->add_option("--prune-tol", prune_tol, "drop outcomes below this probability");

  auto* feasible = app.add_subcommand(
      "feasible", "Majorization feasibility of an ensemble or target state");
  feasible->add_option("source", state_path, "source state JSON file")->required();
  feasible->add_option("target", other_path, "ensemble or target-state JSON file")
      ->required();
  feasible->add_flag("--pmax", want_pmax, "also report the optimal conversion probability");

  auto* verify = app.add_subcommand("verify", "Run a randomized verification campaign");
  verify->add_option("target", target, "thm1 | thm2 | lemma1 | pmax-consistency | monotone")
      ->required();
  verify->add_option("--instances", instances, "number of instances");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--dims", dims_text, "dimension range, e.g. 2..4");
  verify->add_option("--json-out", json_out, "write report to file (requires --seed)");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_option("--replay", replay_seed, "replay one instance seed verbosely");

  auto* gen = app.add_subcommand("gen", "Generate a random state or separable operation");
  gen->add_option("kind", gen_kind, "state | sepop")->required();
  gen->add_option("--dims", gen_dims, "local dimensions D_A D_B")->expected(2);
  gen->add_option("--schmidt", schmidt_text, "comma-separated Schmidt weights");
  gen->add_option("--rounds", rounds, "LOCC rounds (sepop)");
  gen->add_option("--outcomes", outcomes, "outcomes per round (sepop)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*schmidt) return cmd_schmidt(state_path);
    if (*apply) return cmd_apply(op_path, state_path, prune_tol);
    if (*feasible) return cmd_feasible(state_path, other_path, want_pmax);
    if (*verify)
      return cmd_verify(target, instances, seed, dims_text, json_out, workers,
                        replay_seed);
    if (*gen)
      return cmd_gen(gen_kind, gen_dims, schmidt_text, rounds, outcomes, seed,
                     out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
