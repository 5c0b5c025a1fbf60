#include "covertool/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "covertool/error.hpp"

namespace covertool {

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::vector<std::string> labels;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string head;
    if (!(words >> head)) continue;
    if (head.size() < 2 || head.back() != ':') throw ParseError(number, "expected 'vertices:' or 'edge:'");
    head.pop_back();
    if (head != "vertices" && head != "edge") throw ParseError(number, "unknown keyword '" + head + "'");
    Line line{number, head, {}};
    for (std::string label; words >> label;) line.labels.push_back(label);
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError(number == 0 ? 1 : number, "missing 'vertices:' line");
  if (lines.front().keyword != "vertices") throw ParseError(lines.front().number, "first entry must be 'vertices:'");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].keyword == "vertices") throw ParseError(lines[i].number, "repeated 'vertices:' line");
  }
  std::set<std::string> seen;
  for (const auto& v : lines.front().labels) {
    if (!seen.insert(v).second) throw ParseError(lines.front().number, "duplicate vertex '" + v + "'");
  }
  return lines;
}

void check_endpoints(const Line& line, const std::set<std::string>& vertices) {
  std::set<std::string> used;
  for (const auto& v : line.labels) {
    if (!vertices.count(v)) throw ParseError(line.number, "unknown vertex '" + v + "'");
    if (!used.insert(v).second) throw ParseError(line.number, "edge repeats vertex '" + v + "'");
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  const auto& vertices = lines.front().labels;
  const std::set<std::string> known(vertices.begin(), vertices.end());
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.labels.size() != 2) throw ParseError(line.number, "a graph edge needs exactly 2 vertices");
    check_endpoints(line, known);
    auto key = std::minmax(line.labels[0], line.labels[1]);
    if (!seen.emplace(key.first, key.second).second) throw ParseError(line.number, "duplicate edge");
    edges.emplace_back(line.labels[0], line.labels[1]);
  }
  return Graph(vertices, edges);
}

Hypergraph parse_hypergraph(std::istream& in) {
  const auto lines = tokenize(in);
  const auto& vertices = lines.front().labels;
  const std::set<std::string> known(vertices.begin(), vertices.end());
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.labels.size() < 2) throw ParseError(line.number, "a hyperedge needs at least 2 vertices");
    check_endpoints(line, known);
    const std::set<std::string> edge(line.labels.begin(), line.labels.end());
    for (std::size_t j = 1; j < i; ++j) {
      const std::set<std::string> earlier(lines[j].labels.begin(), lines[j].labels.end());
      if (std::includes(edge.begin(), edge.end(), earlier.begin(), earlier.end()) ||
          std::includes(earlier.begin(), earlier.end(), edge.begin(), edge.end())) {
        throw ParseError(line.number, "hypergraph is not simple: edge contains or is contained in line " +
                                          std::to_string(lines[j].number));
      }
    }
    edges.push_back(line.labels);
  }
  return Hypergraph(vertices, edges);
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = open(path);
  return parse_hypergraph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices:";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << "edge: " << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "vertices:";
  for (const auto& v : h.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& e : h.edges()) {
    out << "edge:";
    for (auto v : e) out << ' ' << h.vertices()[v];
    out << '\n';
  }
}

}  // namespace covertool
