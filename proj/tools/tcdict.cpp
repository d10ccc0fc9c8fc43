// Command-line front end: planted-instance generation, pursuit learning
// (with and without outliers), threshold-correlation solving, 2->p norm
// lower bounds, and scoring a learned model against recorded ground truth.
//
// Exit codes: 0 success, 1 usage error, 2 numeric or contract violation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tcdict/csv.hpp"
#include "tcdict/errors.hpp"
#include "tcdict/learner.hpp"
#include "tcdict/metrics.hpp"
#include "tcdict/norms2p.hpp"
#include "tcdict/outlier.hpp"
#include "tcdict/serialize.hpp"
#include "tcdict/synth.hpp"
#include "tcdict/tc.hpp"

namespace {

using namespace tcdict;

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    write_text_file(out_path, payload);
  }
}

std::vector<double> read_weights(const std::string& path, int expected) {
  const Eigen::MatrixXd w = read_matrix_csv_file(path);
  if (w.rows() != 1 || w.cols() != expected) {
    throw ContractViolation("weights must be a 1x" + std::to_string(expected) + " CSV");
  }
  std::vector<double> weights(static_cast<size_t>(expected));
  for (int i = 0; i < expected; ++i) weights[static_cast<size_t>(i)] = w(0, i);
  return weights;
}

struct LearnFlags {
  std::string input;
  int k = 1;
  int m = 1;
  double lambda = 1.0;
  double epsilon = 0.5;
  std::int64_t max_iters = 0;
  int threads = 1;

  LearnConfig to_config() const {
    LearnConfig config;
    config.k = k;
    config.m = m;
    config.lambda = lambda;
    config.epsilon = epsilon;
    if (max_iters > 0) config.max_iters_override = max_iters;
    return config;
  }
};

void add_learn_flags(CLI::App* cmd, LearnFlags& flags) {
  cmd->add_option("--input", flags.input, "signal matrix CSV (d x n)")->required();
  cmd->add_option("--k", flags.k, "promised per-column sparsity")->required();
  cmd->add_option("--m", flags.m, "promised dictionary size")->required();
  cmd->add_option("--lambda", flags.lambda, "norm bound on ||Y_i||^2 / ||x_i||^2 (>= 1)")
      ->required();
  cmd->add_option("--epsilon", flags.epsilon, "target accuracy in (0, 1]")->required();
  cmd->add_option("--max-iters", flags.max_iters, "iteration override");
  cmd->add_option("--threads", flags.threads, "parallelism cap for the candidate scans");
}

int run(int argc, char** argv) {
  CLI::App app{"greedy threshold-correlation dictionary learning"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a planted instance");
  SynthParams params;
  std::string dict_kind = "orthonormal";
  std::string out_x;
  std::string out_truth;
  gen_cmd->add_option("--d", params.d, "ambient dimension")->required();
  gen_cmd->add_option("--n", params.n, "number of signals")->required();
  gen_cmd->add_option("--m", params.m, "dictionary size")->required();
  gen_cmd->add_option("--k", params.k, "per-column sparsity")->required();
  gen_cmd->add_option("--noise-ratio", params.noise_ratio, "noise energy ratio in [0, 0.5]");
  gen_cmd->add_option("--rho", params.rho, "outlier fraction in [0, 0.5)");
  gen_cmd->add_option("--dict", dict_kind, "orthonormal | random_unit");
  gen_cmd->add_option("--seed", params.seed, "generator seed")->required();
  gen_cmd->add_option("--out-x", out_x, "output signal CSV")->required();
  gen_cmd->add_option("--out-truth", out_truth, "output truth JSON")->required();

  // learn
  auto* learn_cmd = app.add_subcommand("learn", "greedy dictionary learning");
  LearnFlags learn_flags;
  std::string out_model;
  std::string out_trace;
  add_learn_flags(learn_cmd, learn_flags);
  learn_cmd->add_option("--out-model", out_model, "output model JSON")->required();
  learn_cmd->add_option("--out-trace", out_trace, "output trace CSV")->required();

  // learn-outlier
  auto* lo_cmd = app.add_subcommand("learn-outlier", "dictionary learning with outliers");
  LearnFlags lo_flags;
  double lo_rho = 0.0;
  std::string lo_out_model;
  std::string lo_out_trace;
  std::string lo_out_outliers;
  add_learn_flags(lo_cmd, lo_flags);
  lo_cmd->add_option("--rho", lo_rho, "outlier fraction in [0, 1)")->required();
  lo_cmd->add_option("--out-model", lo_out_model, "output model JSON")->required();
  lo_cmd->add_option("--out-trace", lo_out_trace, "output trace CSV")->required();
  lo_cmd->add_option("--out-outliers", lo_out_outliers, "output outlier index JSON")->required();

  // tc
  auto* tc_cmd = app.add_subcommand("tc", "solve one threshold-correlation instance");
  std::string tc_vectors;
  std::string tc_weights;
  double tc_tau = 0.0;
  int tc_threads = 1;
  std::string tc_out;
  tc_cmd->add_option("--vectors", tc_vectors, "vectors CSV (d x n, columns are vectors)")
      ->required();
  tc_cmd->add_option("--weights", tc_weights, "weights CSV (1 x n, default all ones)");
  tc_cmd->add_option("--tau", tc_tau, "threshold in [0, 1]")->required();
  tc_cmd->add_option("--threads", tc_threads, "parallelism cap for the candidate scan");
  tc_cmd->add_option("--out", tc_out, "output JSON (default stdout)");

  // norm2p
  auto* norm_cmd = app.add_subcommand("norm2p", "lower-bound the 2->p matrix norm");
  std::string norm_input;
  double norm_p = 4.0;
  int norm_threads = 1;
  std::string norm_out;
  norm_cmd->add_option("--input", norm_input, "matrix CSV (rows are the correlation vectors)")
      ->required();
  norm_cmd->add_option("--p", norm_p, "norm exponent (> 2)")->required();
  norm_cmd->add_option("--threads", norm_threads, "parallelism cap for the candidate scans");
  norm_cmd->add_option("--out", norm_out, "output JSON (default stdout)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "score a model against recorded truth");
  std::string eval_input;
  std::string eval_model;
  std::string eval_truth;
  std::string eval_trace;
  std::string eval_outliers;
  std::string eval_out;
  LearnFlags eval_flags;
  eval_cmd->add_option("--input", eval_input, "signal matrix CSV")->required();
  eval_cmd->add_option("--model", eval_model, "model JSON")->required();
  eval_cmd->add_option("--truth", eval_truth, "truth JSON from gen")->required();
  auto* trace_opt = eval_cmd->add_option("--trace", eval_trace, "trace CSV from learn");
  eval_cmd->add_option("--outliers", eval_outliers, "declared outlier JSON from learn-outlier");
  auto* ek = eval_cmd->add_option("--k", eval_flags.k, "config echo: sparsity");
  auto* em = eval_cmd->add_option("--m", eval_flags.m, "config echo: dictionary size");
  auto* el = eval_cmd->add_option("--lambda", eval_flags.lambda, "config echo: norm bound");
  auto* ee = eval_cmd->add_option("--epsilon", eval_flags.epsilon, "config echo: accuracy");
  trace_opt->needs(ek)->needs(em)->needs(el)->needs(ee);
  eval_cmd->add_option("--out", eval_out, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // anything but --help/--version is a usage error
  }

  if (gen_cmd->parsed()) {
    params.dict_kind = dict_kind_from_string(dict_kind);
    const PlantedInstance instance = generate(params);
    write_matrix_csv_file(out_x, instance.x.data());
    write_text_file(out_truth, truth_to_json(instance));
    return 0;
  }

  if (learn_cmd->parsed()) {
    const SignalMatrix x(read_matrix_csv_file(learn_flags.input));
    const LearnResult result = dict_approx(x, learn_flags.to_config(), learn_flags.threads);
    write_text_file(out_model, model_to_json(result.model));
    std::ostringstream trace;
    write_learn_trace_csv(trace, result.trace);
    write_text_file(out_trace, trace.str());
    return 0;
  }

  if (lo_cmd->parsed()) {
    const SignalMatrix x(read_matrix_csv_file(lo_flags.input));
    OutlierConfig config;
    static_cast<LearnConfig&>(config) = lo_flags.to_config();
    config.rho = lo_rho;
    const OutlierResult result = outlier_dict_approx(x, config, lo_flags.threads);
    write_text_file(lo_out_model, model_to_json(result.model));
    write_text_file(lo_out_outliers, outliers_to_json(result.outlier_indices));
    std::ostringstream trace;
    write_outlier_trace_csv(trace, result.trace);
    write_text_file(lo_out_trace, trace.str());
    return 0;
  }

  if (tc_cmd->parsed()) {
    const Eigen::MatrixXd v = read_matrix_csv_file(tc_vectors);
    TCInstance instance;
    instance.tau = tc_tau;
    instance.vectors.reserve(static_cast<size_t>(v.cols()));
    for (int i = 0; i < v.cols(); ++i) instance.vectors.emplace_back(v.col(i));
    instance.weights = tc_weights.empty()
                           ? std::vector<double>(static_cast<size_t>(v.cols()), 1.0)
                           : read_weights(tc_weights, static_cast<int>(v.cols()));
    emit(tc_solution_to_json(solve_bicriteria(instance, tc_threads)), tc_out);
    return 0;
  }

  if (norm_cmd->parsed()) {
    NormInstance instance{read_matrix_csv_file(norm_input), norm_p};
    const NormLowerBound bound = lower_bound_2_to_p(instance, norm_threads);
    emit(norm_lower_bound_to_json(bound, instance.row_scale()), norm_out);
    return 0;
  }

  if (eval_cmd->parsed()) {
    SignalMatrix x(read_matrix_csv_file(eval_input));
    const DictModel model = model_from_json(read_text_file(eval_model));
    const PlantedInstance truth = truth_from_json(read_text_file(eval_truth), std::move(x));

    const bool config_given =
        ek->count() > 0 && em->count() > 0 && el->count() > 0 && ee->count() > 0;
    std::optional<LearnTrace> trace;
    std::optional<LearnConfig> config;
    if (config_given) config = eval_flags.to_config();
    if (!eval_trace.empty()) {
      std::ifstream in(eval_trace);
      if (!in) throw ContractViolation("cannot open " + eval_trace);
      trace = read_learn_trace_csv(in);
    }
    std::optional<std::vector<int>> declared;
    if (!eval_outliers.empty()) {
      declared = outliers_from_json(read_text_file(eval_outliers));
    }
    const RunMetrics metrics = eval_against_truth(
        model, truth.x, truth, trace ? &*trace : nullptr, config ? &*config : nullptr,
        declared ? &*declared : nullptr);
    emit(metrics_to_json(metrics), eval_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
