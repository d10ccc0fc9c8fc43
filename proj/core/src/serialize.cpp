#include "tcdict/serialize.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "tcdict/csv.hpp"
#include "tcdict/errors.hpp"

namespace tcdict {

namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Eigen::VectorXd vector_from_json(const json& arr) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  return v;
}

json model_json(const DictModel& model) {
  json atoms = json::array();
  for (const auto& a : model.atoms) atoms.push_back(vector_to_json(a));
  json codes = json::array();
  for (const auto& code : model.codes) {
    json col = json::array();
    for (const auto& [atom, coeff] : code) col.push_back(json::array({atom, coeff}));
    codes.push_back(std::move(col));
  }
  return json{{"atoms", std::move(atoms)}, {"codes", std::move(codes)}};
}

DictModel model_from(const json& j) {
  DictModel model;
  for (const auto& a : j.at("atoms")) model.atoms.push_back(vector_from_json(a));
  for (const auto& col : j.at("codes")) {
    std::vector<CodeEntry> code;
    for (const auto& entry : col) {
      code.emplace_back(entry.at(0).get<int>(), entry.at(1).get<double>());
    }
    model.codes.push_back(std::move(code));
  }
  return model;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ContractViolation(std::string("malformed JSON for ") + what);
  }
  return j;
}

}  // namespace

std::string model_to_json(const DictModel& model) { return render(model_json(model)); }

DictModel model_from_json(const std::string& text) {
  return model_from(parse(text, "model"));
}

std::string truth_to_json(const PlantedInstance& instance) {
  json atoms = json::array();
  for (const auto& a : instance.truth.atoms) atoms.push_back(vector_to_json(a));
  json triples = json::array();
  for (size_t i = 0; i < instance.truth.codes.size(); ++i) {
    for (const auto& [atom, coeff] : instance.truth.codes[i]) {
      triples.push_back(json::array({atom, static_cast<int>(i), coeff}));
    }
  }
  const auto& p = instance.params;
  return render(json{{"A_star", std::move(atoms)},
                     {"Y_star", std::move(triples)},
                     {"outliers", instance.outlier_indices},
                     {"gamma_star", instance.gamma_star_actual},
                     {"lambda", instance.lambda_actual},
                     {"seed", p.seed},
                     {"params",
                      json{{"d", p.d},
                           {"n", p.n},
                           {"m", p.m},
                           {"k", p.k},
                           {"noise_ratio", p.noise_ratio},
                           {"rho", p.rho},
                           {"dict_kind", to_string(p.dict_kind)}}}});
}

PlantedInstance truth_from_json(const std::string& text, SignalMatrix x) {
  const json j = parse(text, "truth");
  const json& jp = j.at("params");
  SynthParams params;
  params.d = jp.at("d").get<int>();
  params.n = jp.at("n").get<int>();
  params.m = jp.at("m").get<int>();
  params.k = jp.at("k").get<int>();
  params.noise_ratio = jp.at("noise_ratio").get<double>();
  params.rho = jp.at("rho").get<double>();
  params.dict_kind = dict_kind_from_string(jp.at("dict_kind").get<std::string>());
  params.seed = j.at("seed").get<std::uint64_t>();

  if (x.rows() != params.d || x.cols() != params.n) {
    throw ContractViolation("truth_from_json: X dimensions do not match the recorded params");
  }

  DictModel truth;
  for (const auto& a : j.at("A_star")) truth.atoms.push_back(vector_from_json(a));
  truth.codes.assign(static_cast<size_t>(params.n), {});
  for (const auto& triple : j.at("Y_star")) {
    const int atom = triple.at(0).get<int>();
    const int col = triple.at(1).get<int>();
    truth.codes.at(static_cast<size_t>(col)).emplace_back(atom, triple.at(2).get<double>());
  }

  std::vector<int> outliers = j.at("outliers").get<std::vector<int>>();
  std::vector<bool> is_outlier(static_cast<size_t>(params.n), false);
  for (int i : outliers) is_outlier.at(static_cast<size_t>(i)) = true;

  std::vector<Eigen::VectorXd> outlier_columns;
  outlier_columns.reserve(outliers.size());
  for (int i : outliers) outlier_columns.emplace_back(x.column(i));

  PlantedInstance instance{std::move(x), std::move(truth), {}, std::move(outliers),
                           std::move(outlier_columns), j.at("gamma_star").get<double>(),
                           j.at("lambda").get<double>(), params};
  for (int i = 0; i < params.n; ++i) {
    if (!is_outlier[static_cast<size_t>(i)]) instance.inlier_indices.push_back(i);
  }
  return instance;
}

std::string outliers_to_json(const std::vector<int>& indices) {
  return render(json{{"indices", indices}});
}

std::vector<int> outliers_from_json(const std::string& text) {
  return parse(text, "outliers").at("indices").get<std::vector<int>>();
}

std::string tc_solution_to_json(const TCSolution& solution) {
  return render(json{{"x", vector_to_json(solution.x)},
                     {"effective_threshold", solution.effective_threshold},
                     {"objective", solution.objective},
                     {"hit_set", solution.hit_set},
                     {"degenerate", solution.degenerate}});
}

std::string norm_lower_bound_to_json(const NormLowerBound& bound, double row_scale) {
  return render(json{{"value", bound.value},
                     {"witness", vector_to_json(bound.witness)},
                     {"level", bound.level},
                     {"row_scale", row_scale}});
}

std::string metrics_to_json(const RunMetrics& metrics) {
  json j{{"summary",
          json{{"psi_final", metrics.psi_final},
               {"atom_count", metrics.atom_count},
               {"max_sparsity", metrics.max_sparsity},
               {"wall_time_ms", metrics.wall_time_ms}}},
         {"gamma_star", metrics.gamma_star},
         {"lambda", metrics.lambda},
         {"sparsity_histogram", metrics.sparsity_histogram}};
  if (metrics.config) {
    const auto& c = *metrics.config;
    j["config"] = json{{"k", c.k},
                       {"m", c.m},
                       {"lambda", c.lambda},
                       {"epsilon", c.epsilon},
                       {"tau", c.tau()},
                       {"alpha", c.alpha()},
                       {"beta", c.beta()},
                       {"max_iters", c.max_iters()},
                       {"sparsity_cap", c.sparsity_cap()}};
  }
  if (!metrics.bound_ratio_per_t.empty()) {
    j["bound_ratio_per_t"] = metrics.bound_ratio_per_t;
    j["bound_ok"] = metrics.bound_ok;
  }
  if (metrics.psi_hat_final) j["psi_hat_final"] = *metrics.psi_hat_final;
  if (metrics.outlier_overlap) j["outlier_overlap"] = *metrics.outlier_overlap;
  if (metrics.outlier_bound_ratio_proof) {
    j["outlier_bound_ratio_proof"] = *metrics.outlier_bound_ratio_proof;
  }
  if (metrics.outlier_bound_ratio_thm) {
    j["outlier_bound_ratio_thm"] = *metrics.outlier_bound_ratio_thm;
  }
  return render(j);
}

void write_learn_trace_csv(std::ostream& out, const LearnTrace& trace) {
  out << "t,psi,phi,tc_objective,atoms,max_support\n";
  for (const auto& row : trace.rows) {
    out << row.t << ',' << format_double(row.psi) << ',' << format_double(row.phi) << ','
        << format_double(row.tc_objective) << ',' << row.atoms_so_far << ','
        << row.max_support_count << '\n';
  }
}

LearnTrace read_learn_trace_csv(std::istream& in) {
  LearnTrace trace;
  std::string line;
  if (!std::getline(in, line) || line != "t,psi,phi,tc_objective,atoms,max_support") {
    throw ContractViolation("trace CSV: missing or unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    TraceRow row;
    char sep = 0;
    if (!(ls >> row.t >> sep >> row.psi >> sep >> row.phi >> sep >> row.tc_objective >> sep >>
          row.atoms_so_far >> sep >> row.max_support_count)) {
      throw ContractViolation("trace CSV: malformed row '" + line + "'");
    }
    trace.rows.push_back(row);
  }
  if (!trace.rows.empty()) trace.psi_final = trace.rows.back().psi;
  return trace;
}

void write_outlier_trace_csv(std::ostream& out, const std::vector<OutlierTraceRow>& rows) {
  out << "t,phi,psi_hat,phi_drop\n";
  for (const auto& row : rows) {
    out << row.t << ',' << format_double(row.phi) << ',' << format_double(row.psi_hat) << ','
        << format_double(row.phi_drop) << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractViolation("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractViolation("cannot open " + path + " for writing");
  out << content;
}

}  // namespace tcdict
