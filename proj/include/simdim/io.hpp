#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graph.hpp"

namespace simdim {

// Text format, one block per graph:
//
//   graph <name>
//   n <order>
//   e <u> <v>
//   ...
//   end
//
// '#' starts a comment, blank lines are skipped.  Vertex labels are arbitrary
// non-negative integers; the parser maps the distinct labels, ascending, onto
// indices 0..n-1 (padding with the smallest unused labels when isolated
// vertices make the edge lines mention fewer than n).  A file holds a single
// graph or a whole family; families must agree on order and label set.

std::vector<Graph> parse_family_text(std::istream& in, const std::string& filename);
std::vector<Graph> parse_family_file(const std::string& path);
Graph parse_graph_file(const std::string& path);  // rejects multi-block files

GraphFamily family_from_file(const std::string& path);

// Serialization is deterministic: blocks in member order, edges sorted by
// (min,max) display label, so round-tripping a file is stable.
void serialize_graph(std::ostream& out, const Graph& g);
void serialize_family(std::ostream& out, const std::vector<Graph>& members);
void write_family_file(const std::string& path, const std::vector<Graph>& members);

// Display-label helpers.  Witness sets are printed as "{1,3,7}" using the
// graph's labels; user-supplied sets are parsed the other way round.
int label_to_index(const Graph& g, int label);
std::string format_set(const Graph& g, const VertexSet& s);
std::string format_index_set(const VertexSet& s);  // identity labels
VertexSet parse_label_set(const Graph& g, const std::string& text);

// "P7", "C8", "K4", "N2", "K2x3" constructors for config files and the CLI.
bool looks_like_standard_name(const std::string& token);
Graph standard_graph(const std::string& token);

}  // namespace simdim
