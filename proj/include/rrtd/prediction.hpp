#pragma once

#include <string>
#include <vector>

namespace rrtd {

/// One model's per-state subgoal valuation for one graph.
struct PredictionVector {
  std::string graph_id;
  std::string model;
  std::vector<double> values;
  /// Set when the model's output rests on an arbitrary choice (degenerate
  /// eigenvalue, no admissible partition).
  bool degenerate = false;
};

}  // namespace rrtd
