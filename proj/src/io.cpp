#include "rrtd/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rrtd/error.hpp"

namespace rrtd {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_predictions_csv(std::ostream& out, const std::vector<std::vector<PredictionVector>>& predictions) {
  out << "graph_id,model,state,value\n";
  for (const auto& per_graph : predictions) {
    for (const auto& p : per_graph) {
      for (std::size_t s = 0; s < p.values.size(); ++s) {
        out << p.graph_id << ',' << p.model << ',' << s << ',' << format_double(p.values[s]) << '\n';
      }
    }
  }
}

Json predictions_json(const std::vector<std::vector<PredictionVector>>& predictions) {
  Json arr = Json::array();
  for (const auto& per_graph : predictions) {
    for (const auto& p : per_graph) {
      arr.push_back({{"graph_id", p.graph_id}, {"model", p.model}, {"degenerate", p.degenerate}, {"values", p.values}});
    }
  }
  return arr;
}

void write_cost_table_csv(std::ostream& out, const std::string& graph_id, const AlgCostTable& table) {
  out << "graph_id,alg,s,z,reward,samples,seed\n";
  for (Node s = 0; s < table.n; ++s) {
    for (Node z = 0; z < table.n; ++z) {
      if (s == z) continue;
      out << graph_id << ',' << to_string(table.alg) << ',' << s << ',' << z << ',' << format_double(table(s, z))
          << ',' << table.samples << ',' << table.seed << '\n';
    }
  }
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& m) {
  out << "model";
  for (const auto& name : m.models) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.models[i];
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << ',';
      if (!m.empty(i, j)) out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Json correlation_json(const CorrelationMatrix& m) {
  Json mean = Json::array(), count = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json mrow = Json::array(), crow = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      mrow.push_back(m.empty(i, j) ? Json(nullptr) : Json(m(i, j)));
      crow.push_back(m.contributors(i, j));
    }
    mean.push_back(std::move(mrow));
    count.push_back(std::move(crow));
  }
  return {{"models", m.models}, {"mean", mean}, {"count", count}};
}

Json two_stage_json(const std::string& model, const TwoStageFit& fit, std::size_t trials) {
  return {{"model", model},           {"beta1", fit.params.beta1},         {"beta2", fit.params.beta2},
          {"loglik", fit.loglik},     {"start_loglik", fit.start_loglik}, {"trials", trials}};
}

void write_schedule_csv(std::ostream& out, const Session& session) {
  out << "trial,kind,start,goal,path\n";
  for (std::size_t i = 0; i < session.schedule.size(); ++i) {
    const auto& t = session.schedule[i];
    out << i << ',' << (t.kind == TrialKind::kLong ? "long" : "filler") << ',' << t.task.start << ',' << t.task.goal
        << ',';
    for (std::size_t k = 0; k < t.path.size(); ++k) out << (k ? " " : "") << t.path[k];
    out << '\n';
  }
}

Json session_json(const Session& session) {
  Json trials = Json::array();
  for (const auto& t : session.schedule) {
    trials.push_back({{"kind", t.kind == TrialKind::kLong ? "long" : "filler"},
                      {"start", t.task.start},
                      {"goal", t.task.goal},
                      {"path", t.path}});
  }
  return {{"counts", session.counts}, {"most_visited", most_visited_count(session.counts)}, {"trials", trials}};
}

void write_dot(std::ostream& out, const Graph& g, std::span<const double> values) {
  if (!values.empty() && static_cast<int>(values.size()) != g.size()) {
    throw DomainError("value count differs from graph size");
  }
  double lo = 0, hi = 0;
  if (!values.empty()) {
    const auto [a, b] = std::minmax_element(values.begin(), values.end());
    lo = *a;
    hi = *b;
  }
  out << "graph G {\n  node [style=filled, shape=circle];\n";
  for (Node v = 0; v < g.size(); ++v) {
    out << "  " << v;
    if (!values.empty()) {
      const double t = hi > lo ? (values[v] - lo) / (hi - lo) : 0.5;
      // Light yellow for low values through dark red for high ones.
      char color[64];
      std::snprintf(color, sizeof color, "%.3f %.3f %.3f", 0.15 * (1 - t), 0.2 + 0.8 * t, 1.0 - 0.4 * t);
      out << " [fillcolor=\"" << color << "\", label=\"" << v << "\\n" << format_double(std::round(values[v] * 1000) / 1000)
          << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
    if (!out) throw DataError("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_metadata(const std::filesystem::path& output, const Json& config) {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::floor<std::chrono::seconds>(now);
  const std::time_t t = std::chrono::system_clock::to_time_t(secs);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  Json meta{{"output", output.filename().string()}, {"config", config}, {"timestamp", stamp}};
  auto path = output;
  path += ".meta.json";
  write_file(path, meta.dump(2) + "\n");
}

}  // namespace rrtd
