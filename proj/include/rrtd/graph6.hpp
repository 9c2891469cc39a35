#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rrtd/graph.hpp"

namespace rrtd {

/// graph6 uses a single size byte up to this order.
inline constexpr int kMaxGraph6Nodes = 62;

/// Decodes one graph6 line (no trailing newline). Throws ParseError naming the
/// offending byte offset, or UnsupportedSize for multi-byte size prefixes.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6. Throws UnsupportedSize when g.size() > 62.
std::string write_graph6(const Graph& g);

/// Reads one graph per line. Blank lines and an optional ">>graph6<<" header
/// are skipped; errors are reported with the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace rrtd

namespace rrtd {

/// graph6 text when encodable, otherwise "n<order>-<content hash>".
std::string graph_label(const Graph& g);

}  // namespace rrtd
