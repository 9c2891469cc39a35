#include "rrtd/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"
#include "rrtd/parallel.hpp"
#include "rrtd/random.hpp"
#include "rrtd/spectral.hpp"

namespace rrtd {

namespace {

constexpr char kCacheMagic[8] = {'R', 'R', 'T', 'D', 'C', 'T', '1', '\0'};

std::uint64_t tag_hash(std::string_view tag) {
  return fnv1a(tag);
}

std::uint64_t model_seed(const Graph& g, std::string_view tag, std::uint64_t seed) {
  return derive_seed({seed, content_hash(g), tag_hash(tag)});
}

template <class T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <class T>
bool get(std::istream& in, T& value) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof value));
}

}  // namespace

const std::vector<std::string>& model_tags() {
  static const std::vector<std::string> tags{"RRTD-RW", "RRTD-BFS", "RRTD-IDDFS", "RRTD-DFS", "Degree",
                                             "Betweenness", "QCut", "Solway", "Tomov"};
  return tags;
}

std::vector<std::string> default_comparison_models() {
  std::vector<std::string> out;
  for (const auto& t : model_tags()) {
    if (t != "RRTD-DFS") out.push_back(t);
  }
  return out;
}

std::vector<std::string> parse_models(std::string_view list) {
  if (list == "all") return model_tags();
  std::vector<std::string> out;
  std::stringstream ss{std::string(list)};
  for (std::string tag; std::getline(ss, tag, ',');) {
    if (tag.empty()) continue;
    const auto& tags = model_tags();
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
      std::string valid;
      for (const auto& t : tags) valid += (valid.empty() ? "" : ", ") + t;
      throw UsageError("unknown model '" + tag + "'; valid models: " + valid);
    }
    out.push_back(tag);
  }
  if (out.empty()) throw UsageError("no models given");
  return out;
}

CostTableCache::CostTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (enabled()) std::filesystem::create_directories(dir_);
}

std::filesystem::path CostTableCache::path_for(const Graph& g, Algorithm alg, int samples,
                                               std::uint64_t seed) const {
  std::ostringstream key;
  key << graph_label(g) << '|' << to_string(alg) << '|' << samples << '|' << seed;
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.bin", static_cast<unsigned long long>(tag_hash(key.str())));
  return dir_ / name;
}

std::optional<AlgCostTable> CostTableCache::load(const Graph& g, Algorithm alg, int samples,
                                                 std::uint64_t seed) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(g, alg, samples, seed), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::int32_t n = 0, alg_code = 0, file_samples = 0;
  std::uint64_t file_seed = 0, hash = 0;
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) return std::nullopt;
  if (!get(in, n) || !get(in, alg_code) || !get(in, file_samples) || !get(in, file_seed) || !get(in, hash)) {
    return std::nullopt;
  }
  // A hash collision on the file name must not hand back another graph's table.
  if (n != g.size() || alg_code != static_cast<std::int32_t>(alg) || file_seed != seed ||
      hash != content_hash(g)) {
    return std::nullopt;
  }
  AlgCostTable table;
  table.alg = alg;
  table.n = n;
  table.samples = file_samples;
  table.seed = file_seed;
  table.reward.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  if (!in.read(reinterpret_cast<char*>(table.reward.data()),
               static_cast<std::streamsize>(table.reward.size() * sizeof(double)))) {
    return std::nullopt;
  }
  const int expected_samples = alg == Algorithm::kRandomWalk ? 0 : samples;
  if (file_samples != expected_samples) return std::nullopt;
  return table;
}

void CostTableCache::store(const Graph& g, const AlgCostTable& table) const {
  if (!enabled()) return;
  const auto path = path_for(g, table.alg, table.alg == Algorithm::kRandomWalk ? 0 : table.samples, table.seed);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write cache file " + tmp.string());
    out.write(kCacheMagic, sizeof kCacheMagic);
    put(out, static_cast<std::int32_t>(table.n));
    put(out, static_cast<std::int32_t>(table.alg));
    put(out, static_cast<std::int32_t>(table.samples));
    put(out, table.seed);
    put(out, content_hash(g));
    out.write(reinterpret_cast<const char*>(table.reward.data()),
              static_cast<std::streamsize>(table.reward.size() * sizeof(double)));
    if (!out) throw DataError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

AlgCostTable CostTableCache::get_or_compute(const Graph& g, Algorithm alg, int samples, std::uint64_t seed) const {
  const int key_samples = alg == Algorithm::kRandomWalk ? 0 : samples;
  if (auto hit = load(g, alg, key_samples, seed)) return *hit;
  auto table = alg_cost_table(g, alg, samples, seed);
  // Random-walk tables are exact and cheap, so they are never cached.
  if (alg != Algorithm::kRandomWalk) store(g, table);
  return table;
}

std::vector<PredictionVector> predict_graph(const Graph& g, const std::vector<std::string>& models,
                                            const ModelConfig& config, const CostTableCache& cache) {
  std::vector<PredictionVector> out;
  out.reserve(models.size());
  for (const auto& tag : models) {
    if (tag.rfind("RRTD-", 0) == 0) {
      const Algorithm alg = parse_algorithm(std::string_view(tag).substr(5));
      out.push_back(rrtd_predictions(g, cache.get_or_compute(g, alg, config.samples, config.seed), config.dist));
    } else if (tag == "Degree") {
      out.push_back(degree_predictions(g));
    } else if (tag == "Betweenness") {
      out.push_back(betweenness_predictions(g));
    } else if (tag == "QCut") {
      out.push_back(qcut_predictions(g));
    } else if (tag == "Solway") {
      out.push_back(solway_predictions(g, cut_balance_scorer(), config.solway_noise_draws, model_seed(g, tag, config.seed)));
    } else if (tag == "Tomov") {
      out.push_back(tomov_predictions(g, config.tomov, model_seed(g, tag, config.seed)));
    } else {
      throw UsageError("unknown model '" + tag + "'");
    }
  }
  return out;
}

std::vector<std::vector<PredictionVector>> predict_corpus(const std::vector<Graph>& corpus,
                                                          const std::vector<std::string>& models,
                                                          const ModelConfig& config, int workers,
                                                          const CostTableCache& cache) {
  std::vector<std::vector<PredictionVector>> out(corpus.size());
  parallel_for(corpus.size(), workers, [&](std::size_t i) { out[i] = predict_graph(corpus[i], models, config, cache); });
  return out;
}

std::vector<std::size_t> subsample_indices(std::size_t total, std::size_t k, std::uint64_t seed) {
  if (k > total) throw UsageError("subsample of " + std::to_string(k) + " exceeds corpus size " + std::to_string(total));
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(derive_seed({seed, 0x5ab5a3b1e}));
  // Partial Fisher-Yates: the first k slots end up a uniform sample.
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(rng, total - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace rrtd
