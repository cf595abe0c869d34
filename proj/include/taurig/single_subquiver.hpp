#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taurig/dynkin.hpp"
#include "taurig/quiver.hpp"

namespace taurig {

// A full subquiver of the separated quiver selected by signed vertices,
// at most one sign per base vertex. (Exception: the representation
// finiteness witness reuses this struct for the whole separated quiver.)
struct SingleSubquiver {
  std::vector<SignedVertex> chosen;  // ordered by (base index, sign), plus first
  Quiver induced;

  friend bool operator==(const SingleSubquiver&, const SingleSubquiver&) = default;
};

struct FinitenessDecision {
  bool finite = false;
  std::optional<SingleSubquiver> witness;  // present iff finite == false
  std::vector<std::pair<Graph, DynkinType>> component_report;
};

namespace detail {

// Adjacency of the separated quiver over base vertex indices: arrow i -> j
// contributes the pair (i, j), meaning i+ -> j-.
inline std::vector<std::pair<int, int>> base_arrow_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(q.num_arrows());
  for (std::size_t k = 0; k < q.num_arrows(); ++k)
    pairs.emplace_back(q.arrow_src(k), q.arrow_dst(k));
  return pairs;
}

// Underlying graph of the single subquiver picked by `sign` restricted to
// `chosen` bases (chosen[i] false = base i omitted). Vertex names are the
// signed names; loops never survive since a kept arrow needs sign[src] = +
// and sign[dst] = -.
inline Graph single_subquiver_graph(const Quiver& q,
                                    const std::vector<std::pair<int, int>>& pairs,
                                    const std::vector<Sign>& sign,
                                    const std::vector<char>& chosen) {
  const int n = static_cast<int>(q.num_vertices());
  Graph g;
  std::vector<int> local(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!chosen[i]) continue;
    local[i] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(q.vertices()[i] + (sign[i] == Sign::plus ? '+' : '-'));
  }
  for (auto [i, j] : pairs) {
    if (!chosen[i] || !chosen[j]) continue;
    if (sign[i] != Sign::plus || sign[j] != Sign::minus) continue;
    int u = local[i], v = local[j];
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g;
}

inline SingleSubquiver materialize(const Quiver& q, const Quiver& qs,
                                   const std::vector<Sign>& sign,
                                   const std::vector<char>& chosen) {
  SingleSubquiver sub;
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    if (!chosen[i]) continue;
    sub.chosen.push_back({q.vertices()[i], sign[i]});
    keep.push_back(sub.chosen.back().str());
  }
  sub.induced = full_subquiver(qs, keep);
  return sub;
}

}  // namespace detail

// The 2^n single subquivers choosing one sign for every base vertex, in
// lexicographic order with + before - and vertex 0 most significant.
// Stops early when fn returns false.
template <typename Fn>
void for_each_maximal_single_subquiver(const Quiver& q, Fn&& fn) {
  const std::size_t n = q.num_vertices();
  if (n >= 63) throw std::invalid_argument("too many vertices for sign enumeration");
  const Quiver qs = separated_quiver(q);
  const auto pairs = detail::base_arrow_pairs(q);
  std::vector<Sign> sign(n);
  std::vector<char> chosen(n, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      sign[i] = (mask >> (n - 1 - i)) & 1 ? Sign::minus : Sign::plus;
    if (!fn(detail::materialize(q, qs, sign, chosen))) return;
  }
}

inline std::vector<SingleSubquiver> maximal_single_subquivers(const Quiver& q) {
  std::vector<SingleSubquiver> out;
  for_each_maximal_single_subquiver(q, [&](SingleSubquiver s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

// Decides tau-rigid finiteness: every single subquiver of the separated
// quiver must be a disjoint union of Dynkin graphs. Only the 2^n maximal
// sign choices need checking; smaller single subquivers are full subgraphs
// of maximal ones and Dynkin unions are closed under vertex deletion.
inline FinitenessDecision is_tau_rigid_finite(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  if (n >= 63) throw std::invalid_argument("too many vertices for sign enumeration");
  const auto pairs = detail::base_arrow_pairs(q);
  const std::vector<char> chosen(n, 1);
  std::vector<Sign> sign(n);

  FinitenessDecision decision;
  decision.finite = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      sign[i] = (mask >> (n - 1 - i)) & 1 ? Sign::minus : Sign::plus;
    Graph g = detail::single_subquiver_graph(q, pairs, sign, chosen);
    auto [ok, types] = is_dynkin_union(g);
    if (ok) continue;
    decision.finite = false;
    decision.witness = detail::materialize(q, separated_quiver(q), sign, chosen);
    auto comps = connected_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
      decision.component_report.emplace_back(std::move(comps[c]), std::move(types[c]));
    break;
  }
  return decision;
}

// Gabriel's criterion for the separated quiver: the radical square zero
// algebra is representation finite iff the whole separated quiver is a
// disjoint union of Dynkin graphs. The witness on failure is the full
// separated quiver.
inline FinitenessDecision is_representation_finite(const Quiver& q) {
  const Quiver qs = separated_quiver(q);
  Graph g = underlying_graph(qs);
  auto [ok, types] = is_dynkin_union(g);

  FinitenessDecision decision;
  decision.finite = ok;
  auto comps = connected_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    decision.component_report.emplace_back(std::move(comps[c]), std::move(types[c]));
  if (!ok) {
    SingleSubquiver w;
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      w.chosen.push_back({q.vertices()[i], Sign::plus});
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      w.chosen.push_back({q.vertices()[i], Sign::minus});
    w.induced = qs;
    decision.witness = std::move(w);
  }
  return decision;
}

// Connected single subquivers that carry at least one sincere tau-rigid
// module: all of them except the minus singletons {i-}. Ordered by vertex
// count, then lexicographically by (base index, sign) with + before -.
inline std::vector<SingleSubquiver> enumerate_s_plus(const Quiver& q) {
  const int n = static_cast<int>(q.num_vertices());
  if (n > 40) throw std::invalid_argument("too many vertices for subquiver enumeration");
  const Quiver qs = separated_quiver(q);
  const auto pairs = detail::base_arrow_pairs(q);

  // signature: (base index, 0 plus / 1 minus) per chosen vertex
  std::vector<std::pair<std::vector<std::pair<int, int>>, SingleSubquiver>> found;

  std::vector<int> digit(n, 0);  // 0 omit, 1 plus, 2 minus
  std::vector<Sign> sign(n);
  std::vector<char> chosen(n, 0);
  for (;;) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
      chosen[i] = digit[i] != 0;
      sign[i] = digit[i] == 2 ? Sign::minus : Sign::plus;
      count += chosen[i];
    }
    if (count > 0) {
      Graph g = detail::single_subquiver_graph(q, pairs, sign, chosen);
      bool connected = connected_components(g).size() == 1;
      bool minus_singleton = count == 1 && g.edges.empty() &&
                             std::find(digit.begin(), digit.end(), 2) != digit.end();
      if (connected && !minus_singleton) {
        std::vector<std::pair<int, int>> sig;
        for (int i = 0; i < n; ++i)
          if (chosen[i]) sig.emplace_back(i, digit[i] == 2 ? 1 : 0);
        found.emplace_back(std::move(sig), detail::materialize(q, qs, sign, chosen));
      }
    }
    int i = n - 1;
    while (i >= 0 && digit[i] == 2) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SingleSubquiver> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace taurig
