#pragma once

#include <iosfwd>
#include <string>

#include "covertool/graph.hpp"

namespace covertool {

// Line-oriented formats:
//
//   # comment
//   vertices: z x1 x2 x3
//   edge: z x1
//   edge: z x2 x3        (hypergraphs: two or more labels)
//
// Errors are reported as ParseError carrying the 1-based line number.

Graph parse_graph(std::istream& in);
Hypergraph parse_hypergraph(std::istream& in);

Graph read_graph_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace covertool
