#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ftsp/graph.hpp"

namespace ftsp {

// Text format consumed by all CLI commands:
//   first line  `n m directed {unit|weighted}`
//   then m lines `u v [w]` with 0-based vertices and decimal weights.
// Lines starting with '#' are comments. Self-loops are discarded.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Canonical decimal rendering: integers print without a fractional part so
// structured outputs stay byte-stable.
std::string format_weight(Weight w);

// FNV-1a over the canonical edge list; identifies the input graph in dso files.
std::uint64_t graph_checksum(const Graph& g);

}  // namespace ftsp
