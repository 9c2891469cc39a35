#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrtd/analysis.hpp"
#include "rrtd/graph.hpp"
#include "rrtd/prediction.hpp"
#include "rrtd/search.hpp"
#include "rrtd/stimuli.hpp"

namespace rrtd {

using Json = nlohmann::ordered_json;

/// Shortest text that round-trips the double; "nan" and "inf" spelled out.
std::string format_double(double x);

/// Columns: graph_id, model, state, value.
void write_predictions_csv(std::ostream& out, const std::vector<std::vector<PredictionVector>>& predictions);
Json predictions_json(const std::vector<std::vector<PredictionVector>>& predictions);

/// Columns: graph_id, alg, s, z, reward, samples, seed. Diagonal cells are skipped.
void write_cost_table_csv(std::ostream& out, const std::string& graph_id, const AlgCostTable& table);

/// Square matrix with a leading model column; empty cells are blank.
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m);
Json correlation_json(const CorrelationMatrix& m);

Json two_stage_json(const std::string& model, const TwoStageFit& fit, std::size_t trials);

/// Columns: trial, kind, start, goal, path (states separated by spaces).
void write_schedule_csv(std::ostream& out, const Session& session);
Json session_json(const Session& session);

/// Graphviz rendering with nodes shaded by min-max normalized values.
void write_dot(std::ostream& out, const Graph& g, std::span<const double> values = {});

/// Writes via a temporary file and rename. Throws DataError naming the path.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Sidecar next to an output: "<output>.meta.json" with config and a UTC timestamp.
void write_metadata(const std::filesystem::path& output, const Json& config);

}  // namespace rrtd
