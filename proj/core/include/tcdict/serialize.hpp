#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcdict/metrics.hpp"
#include "tcdict/model.hpp"
#include "tcdict/norms2p.hpp"
#include "tcdict/outlier.hpp"
#include "tcdict/synth.hpp"
#include "tcdict/tc.hpp"

namespace tcdict {

// JSON payloads are rendered with shortest round-trip doubles, so rewriting
// an unchanged object is byte-stable.

std::string model_to_json(const DictModel& model);
DictModel model_from_json(const std::string& text);

/// truth.json: planted dictionary, sparse Y* triples [atom, column, value],
/// outliers, gamma*, lambda, seed, and the generator parameters.
std::string truth_to_json(const PlantedInstance& instance);
/// Rebuilds a PlantedInstance from truth.json plus the matching X matrix.
PlantedInstance truth_from_json(const std::string& text, SignalMatrix x);

std::string outliers_to_json(const std::vector<int>& indices);
std::vector<int> outliers_from_json(const std::string& text);

std::string tc_solution_to_json(const TCSolution& solution);
std::string norm_lower_bound_to_json(const NormLowerBound& bound, double row_scale);
std::string metrics_to_json(const RunMetrics& metrics);

/// trace.csv for learn runs: t,psi,phi,tc_objective,atoms,max_support.
void write_learn_trace_csv(std::ostream& out, const LearnTrace& trace);
LearnTrace read_learn_trace_csv(std::istream& in);

/// trace.csv for learn-outlier runs: t,phi,psi_hat,phi_drop.
void write_outlier_trace_csv(std::ostream& out, const std::vector<OutlierTraceRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tcdict
