#include "rrtd/graph6.hpp"

#include <fstream>
#include <istream>

#include "rrtd/error.hpp"

namespace rrtd {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const int first = static_cast<unsigned char>(text[0]);
  if (first < kBias || first > kMaxByte) throw ParseError("graph6: size byte out of range", 0);
  if (first == kMaxByte) {
    throw UnsupportedSize("graph6: multi-byte size prefix (n > 62) is not supported");
  }
  const int n = first - kBias;
  if (n < 1) throw ParseError("graph6: zero-node graph", 0);

  const std::size_t expected = 1 + payload_bytes(n);
  for (std::size_t i = 1; i < text.size() && i < expected; ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) throw ParseError("graph6: byte out of range", i);
  }
  if (text.size() < expected) throw ParseError("graph6: truncated payload", text.size());
  if (text.size() > expected) throw ParseError("graph6: trailing data", expected);

  std::vector<Graph::Row> rows(static_cast<std::size_t>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((group >> (5 - bit % 6)) & 1) {
        rows[i].set(static_cast<std::size_t>(j));
        rows[j].set(static_cast<std::size_t>(i));
      }
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = 1 + bit / 6;
    const int group = static_cast<unsigned char>(text[last]) - kBias;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (group & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.size();
  if (n > kMaxGraph6Nodes) {
    throw UnsupportedSize("graph6: cannot encode " + std::to_string(n) + " nodes (max 62)");
  }
  std::string out(1 + payload_bytes(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view body = line;
    if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty()) continue;
    try {
      graphs.push_back(parse_graph6(body));
    } catch (const Error& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return read_graph6_stream(in);
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace rrtd

#include <cstdio>

namespace rrtd {

std::string graph_label(const Graph& g) {
  if (g.size() <= kMaxGraph6Nodes) return write_graph6(g);
  char buf[40];
  std::snprintf(buf, sizeof buf, "n%d-%016llx", g.size(), static_cast<unsigned long long>(content_hash(g)));
  return buf;
}

}  // namespace rrtd
