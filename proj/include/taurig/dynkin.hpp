#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taurig/quiver.hpp"

namespace taurig {

// Classification of a connected graph as a simply laced Dynkin diagram.
struct DynkinType {
  enum class Kind { A, D, E, NotDynkin };

  Kind kind = Kind::NotDynkin;
  int rank = 0;        // meaningful for A/D/E
  std::string reason;  // meaningful for NotDynkin

  bool is_dynkin() const noexcept { return kind != Kind::NotDynkin; }

  std::string str() const {
    switch (kind) {
      case Kind::A: return "A" + std::to_string(rank);
      case Kind::D: return "D" + std::to_string(rank);
      case Kind::E: return "E" + std::to_string(rank);
      default: return "NotDynkin(" + reason + ")";
    }
  }

  static DynkinType A(int n) { return {Kind::A, n, {}}; }
  static DynkinType D(int n) { return {Kind::D, n, {}}; }
  static DynkinType E(int n) { return {Kind::E, n, {}}; }
  static DynkinType not_dynkin(std::string reason) {
    return {Kind::NotDynkin, 0, std::move(reason)};
  }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Decides whether a connected graph is one of A(n), D(n>=4), E(6..8).
// A(1) is the single vertex; A(2) the single edge. Rejection reasons:
// "loop", "multi-edge", "cycle", "degree>3", "multiple branch vertices",
// "branch pattern".
inline DynkinType classify_connected(const Graph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n == 0) throw std::invalid_argument("classify_connected: empty graph");

  for (auto [u, v] : g.edges)
    if (u == v) return DynkinType::not_dynkin("loop");

  {
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return DynkinType::not_dynkin("multi-edge");
  }

  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n) throw std::invalid_argument("classify_connected: graph is not connected");
  }

  // Connected and simple: a tree iff |E| = |V| - 1.
  if (static_cast<int>(g.edges.size()) != n - 1) return DynkinType::not_dynkin("cycle");

  int branch = -1;
  for (int v = 0; v < n; ++v) {
    int deg = static_cast<int>(adj[v].size());
    if (deg >= 4) return DynkinType::not_dynkin("degree>3");
    if (deg == 3) {
      if (branch != -1) return DynkinType::not_dynkin("multiple branch vertices");
      branch = v;
    }
  }

  if (branch == -1) return DynkinType::A(n);

  // Arm lengths in edges, walking from the branch vertex to each leaf.
  std::array<int, 3> arms{};
  for (int k = 0; k < 3; ++k) {
    int prev = branch;
    int cur = adj[branch][k];
    int len = 1;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms[k] = len;
  }
  std::sort(arms.begin(), arms.end());

  if (arms[0] == 1 && arms[1] == 1) return DynkinType::D(arms[2] + 3);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinType::E(arms[2] + 4);
  return DynkinType::not_dynkin("branch pattern");
}

// Classifies every connected component; first = true iff all are Dynkin.
// The component order matches connected_components(g). The empty graph is
// vacuously a Dynkin union.
inline std::pair<bool, std::vector<DynkinType>> is_dynkin_union(const Graph& g) {
  std::vector<DynkinType> types;
  bool all = true;
  for (const Graph& c : connected_components(g)) {
    types.push_back(classify_connected(c));
    all = all && types.back().is_dynkin();
  }
  return {all, std::move(types)};
}

}  // namespace taurig
