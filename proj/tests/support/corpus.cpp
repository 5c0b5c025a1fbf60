#include "corpus.hpp"

#include <algorithm>
#include <set>

#include "covertool/cover_ideals.hpp"

namespace covertool::testing {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

Graph from_edges(std::size_t n, const EdgeList& edges) {
  auto names = labels(n);
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [u, v] : edges) named.emplace_back(names[u], names[v]);
  return Graph(names, named);
}

EdgeList prufer_decode(const std::vector<std::size_t>& code, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  EdgeList edges;
  for (auto c : code) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

std::string ahu_encoding(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (auto u : adj[v]) {
    if (u != parent) children.push_back(ahu_encoding(adj, u, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

/// Isomorphism-invariant encoding: AHU string rooted at the center(s).
std::string canonical_form(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer) {
      for (auto u : adj[v]) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (auto c : layer) {
    auto code = ahu_encoding(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return from_edges(n, edges);
}

std::vector<NamedGraph> nonisomorphic_trees(std::size_t n) {
  std::vector<NamedGraph> out;
  if (n == 1) {
    out.push_back({"T1_1", Graph({"v1"}, {})});
    return out;
  }
  if (n == 2) {
    out.push_back({"T2_1", from_edges(2, {{0, 1}})});
    return out;
  }
  std::set<std::string> seen;
  std::vector<std::size_t> code(n - 2, 0);
  while (true) {
    const auto edges = prufer_decode(code, n);
    if (seen.insert(canonical_form(n, edges)).second) {
      out.push_back({"T" + std::to_string(n) + "_" + std::to_string(out.size() + 1), from_edges(n, edges)});
    }
    std::size_t i = 0;
    while (i < code.size() && code[i] == n - 1) code[i++] = 0;
    if (i == code.size()) break;
    ++code[i];
  }
  return out;
}

std::vector<NamedGraph> acceptance_trees() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (auto& t : nonisomorphic_trees(n)) out.push_back(std::move(t));
  }
  out.push_back({"P7", path_graph(7)});
  out.push_back({"K1_6", star_graph(6)});
  return out;
}

std::vector<NamedGraph> full_tree_corpus() {
  auto out = acceptance_trees();
  out.push_back({"spider_S112", Graph({"c", "a", "b", "d1", "d2"},
                                      {{"c", "a"}, {"c", "b"}, {"c", "d1"}, {"d1", "d2"}})});
  for (auto& t : nonisomorphic_trees(7)) out.push_back(std::move(t));
  return out;
}

std::vector<NamedGraph> cyclic_corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"C3", cycle_graph(3)});
  out.push_back({"C4", cycle_graph(4)});
  out.push_back({"C5", cycle_graph(5)});
  out.push_back({"K4", complete_graph(4)});
  out.push_back({"paw", from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})});
  out.push_back({"house", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})});
  return out;
}

}  // namespace covertool::testing
