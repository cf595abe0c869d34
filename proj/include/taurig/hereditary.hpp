#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taurig/dynkin.hpp"
#include "taurig/linalg.hpp"
#include "taurig/quiver.hpp"
#include "taurig/single_subquiver.hpp"

namespace taurig {

using DimensionVector = std::vector<int>;

// Derives the per-subquiver (or per-root) stream seed from the global one.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Tits form q(d) = sum d_i^2 - sum_{edges {i,j}} d_i d_j. A loop at i
// contributes -d_i^2.
inline long long tits_form(const Graph& g, const DimensionVector& d) {
  if (d.size() != g.vertices.size()) throw std::invalid_argument("dimension vector size mismatch");
  long long q = 0;
  for (int di : d) q += static_cast<long long>(di) * di;
  for (auto [u, v] : g.edges) q -= static_cast<long long>(d[u]) * d[v];
  return q;
}

// Euler form <a, b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
inline long long euler_form(const Quiver& q, const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != q.num_vertices() || b.size() != q.num_vertices())
    throw std::invalid_argument("dimension vector size mismatch");
  long long e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e += static_cast<long long>(a[i]) * b[i];
  for (std::size_t k = 0; k < q.num_arrows(); ++k)
    e -= static_cast<long long>(a[q.arrow_src(k)]) * b[q.arrow_dst(k)];
  return e;
}

// Positive roots of a connected Dynkin graph: d > 0 with q(d) = 1, found by
// box search. Coordinates of a positive root never exceed the largest
// coefficient of the highest root: 1 in type A, 2 in type D, 6 in type E.
// Sorted by total dimension, then lexicographically.
inline std::vector<DimensionVector> enumerate_positive_roots(const Graph& g) {
  DynkinType type = classify_connected(g);
  if (!type.is_dynkin())
    throw std::invalid_argument("not a Dynkin graph: " + type.str());
  int bound = type.kind == DynkinType::Kind::A ? 1 : type.kind == DynkinType::Kind::D ? 2 : 6;

  const int n = static_cast<int>(g.vertices.size());
  std::vector<DimensionVector> roots;
  DimensionVector d(n, 0);
  for (;;) {
    int i = n - 1;
    while (i >= 0 && d[i] == bound) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
    if (tits_form(g, d) == 1) roots.push_back(d);
  }
  std::sort(roots.begin(), roots.end(), [](const DimensionVector& a, const DimensionVector& b) {
    long long ta = std::accumulate(a.begin(), a.end(), 0LL);
    long long tb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return roots;
}

// Vertex order with every arrow pointing forward; throws on oriented cycles.
inline std::vector<int> topological_order(const Quiver& q) {
  const int n = static_cast<int>(q.num_vertices());
  std::vector<int> indegree(n, 0);
  // Loops count too and are never released below, so they read as cycles.
  for (std::size_t k = 0; k < q.num_arrows(); ++k) ++indegree[q.arrow_dst(k)];
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (;;) {
    int next = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indegree[v] == 0) {
        next = v;
        break;
      }
    if (next == -1) break;
    placed[next] = 1;
    order.push_back(next);
    for (std::size_t k = 0; k < q.num_arrows(); ++k)
      if (q.arrow_src(k) == next && q.arrow_dst(k) != next) --indegree[q.arrow_dst(k)];
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("quiver has an oriented cycle");
  return order;
}

// Cartan matrix of an acyclic quiver: column i is the dimension vector of
// the indecomposable projective at i, i.e. C[j][i] = number of paths i -> j.
inline IntMatrix cartan_matrix(const Quiver& q) {
  const int n = static_cast<int>(q.num_vertices());
  auto order = topological_order(q);
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> paths(n, 0);
    paths[i] = 1;
    for (int v : order)
      if (paths[v] != 0)
        for (std::size_t k = 0; k < q.num_arrows(); ++k)
          if (q.arrow_src(k) == v) paths[q.arrow_dst(k)] += paths[v];
    for (int j = 0; j < n; ++j) c(j, i) = paths[j];
  }
  return c;
}

// Finite dimensional representation over F_p: a vector space per vertex and
// a matrix per arrow, with arrow a: i -> j acting as a map X_i -> X_j (the
// map sits in arrow_maps[k] with shape dims[j] x dims[i]).
struct Representation {
  Quiver quiver;
  std::uint32_t p = 2;
  DimensionVector dims;
  std::vector<FpMatrix> arrow_maps;
};

inline void check_shapes(const Representation& x) {
  if (x.dims.size() != x.quiver.num_vertices())
    throw std::invalid_argument("dimension vector size mismatch");
  for (int d : x.dims)
    if (d < 0) throw std::invalid_argument("negative dimension");
  if (x.arrow_maps.size() != x.quiver.num_arrows())
    throw std::invalid_argument("arrow map count mismatch");
  for (std::size_t k = 0; k < x.arrow_maps.size(); ++k) {
    const FpMatrix& m = x.arrow_maps[k];
    if (m.prime() != x.p) throw std::invalid_argument("arrow map modulus mismatch");
    if (m.rows() != static_cast<std::size_t>(x.dims[x.quiver.arrow_dst(k)]) ||
        m.cols() != static_cast<std::size_t>(x.dims[x.quiver.arrow_src(k)]))
      throw std::invalid_argument("arrow map shape mismatch");
  }
}

// Basis of Hom(X, Y): tuples (phi_i: X_i -> Y_i) with phi_j X_a = Y_a phi_i
// for every arrow a: i -> j, computed as the nullspace of the intertwiner
// system. The basis is canonical (reduced echelon parametrization).
inline std::vector<std::vector<FpMatrix>> hom_space(const Representation& x,
                                                    const Representation& y) {
  if (!(x.quiver == y.quiver)) throw std::invalid_argument("representations over different quivers");
  if (x.p != y.p) throw std::invalid_argument("representations over different fields");
  check_shapes(x);
  check_shapes(y);
  const Quiver& q = x.quiver;
  const std::uint32_t p = x.p;
  const int n = static_cast<int>(q.num_vertices());

  std::vector<std::size_t> offset(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[i + 1] = offset[i] + static_cast<std::size_t>(y.dims[i]) * x.dims[i];
  const std::size_t unknowns = offset[n];

  std::size_t num_rows = 0;
  for (std::size_t k = 0; k < q.num_arrows(); ++k)
    num_rows += static_cast<std::size_t>(y.dims[q.arrow_dst(k)]) * x.dims[q.arrow_src(k)];

  FpMatrix a(num_rows, unknowns, p);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const int i = q.arrow_src(k);
    const int j = q.arrow_dst(k);
    const FpMatrix& xa = x.arrow_maps[k];
    const FpMatrix& ya = y.arrow_maps[k];
    for (int r = 0; r < y.dims[j]; ++r)
      for (int c = 0; c < x.dims[i]; ++c) {
        for (int t = 0; t < x.dims[j]; ++t)
          a(row, offset[j] + static_cast<std::size_t>(r) * x.dims[j] + t) =
              fp::add(a(row, offset[j] + static_cast<std::size_t>(r) * x.dims[j] + t),
                      xa(t, c), p);
        for (int t = 0; t < y.dims[i]; ++t)
          a(row, offset[i] + static_cast<std::size_t>(t) * x.dims[i] + c) =
              fp::sub(a(row, offset[i] + static_cast<std::size_t>(t) * x.dims[i] + c),
                      ya(r, t), p);
        ++row;
      }
  }

  std::vector<std::vector<FpMatrix>> basis;
  for (const auto& v : nullspace_basis(a)) {
    std::vector<FpMatrix> phi;
    phi.reserve(n);
    for (int i = 0; i < n; ++i) {
      FpMatrix m(y.dims[i], x.dims[i], p);
      for (int r = 0; r < y.dims[i]; ++r)
        for (int c = 0; c < x.dims[i]; ++c)
          m(r, c) = v[offset[i] + static_cast<std::size_t>(r) * x.dims[i] + c];
      phi.push_back(std::move(m));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

inline int end_dim(const Representation& x) {
  return static_cast<int>(hom_space(x, x).size());
}

// Draws random arrow maps until the endomorphism ring has dimension 1.
// For a root of a Dynkin quiver the generic representation is the unique
// indecomposable with that dimension vector, so this terminates fast.
inline Representation generic_indecomposable(const Quiver& q, const DimensionVector& d,
                                             std::uint32_t p, std::uint64_t seed,
                                             int budget = 64) {
  if (d.size() != q.num_vertices()) throw std::invalid_argument("dimension vector size mismatch");
  bool nonzero = false;
  for (int di : d) {
    if (di < 0) throw std::invalid_argument("negative dimension");
    nonzero = nonzero || di > 0;
  }
  if (!nonzero) throw std::invalid_argument("dimension vector must be nonzero");

  std::mt19937_64 rng(seed);
  Representation x;
  x.quiver = q;
  x.p = p;
  x.dims = d;
  for (int attempt = 0; attempt < budget; ++attempt) {
    x.arrow_maps.clear();
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
      FpMatrix m(d[q.arrow_dst(k)], d[q.arrow_src(k)], p);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m(r, c) = static_cast<std::uint32_t>(rng() % p);
      x.arrow_maps.push_back(std::move(m));
    }
    if (end_dim(x) == 1) return x;
  }
  throw Error("no indecomposable representation found within the sampling budget");
}

// Rigidity over the path algebra of an acyclic quiver:
// dim Ext^1(X, X) = dim End(X) - <d, d>.
inline bool is_rigid_hereditary(const Representation& x) {
  topological_order(x.quiver);  // rejects oriented cycles
  long long ext = end_dim(x) - euler_form(x.quiver, x.dims, x.dims);
  if (ext < 0) throw std::logic_error("negative Ext dimension");
  return ext == 0;
}

// Multiplicity vector of top(X) = X / rad X: t_i = d_i - rank of the
// concatenation of all incoming arrow maps at i.
inline DimensionVector top_vector(const Representation& x) {
  check_shapes(x);
  const Quiver& q = x.quiver;
  const int n = static_cast<int>(q.num_vertices());
  DimensionVector t(n, 0);
  for (int i = 0; i < n; ++i) {
    std::size_t cols = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k)
      if (q.arrow_dst(k) == i) cols += x.dims[q.arrow_src(k)];
    FpMatrix concat(x.dims[i], cols, x.p);
    std::size_t at = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
      if (q.arrow_dst(k) != i) continue;
      const FpMatrix& m = x.arrow_maps[k];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) concat(r, at + c) = m(r, c);
      at += m.cols();
    }
    t[i] = x.dims[i] - static_cast<int>(rank(concat));
  }
  return t;
}

// Multiplicities of the minimal projective presentation P1 -> P0 -> X -> 0
// over the path algebra: P0 = sum P(i)^{n_i}, P1 = sum P(i)^{m_i}.
struct Presentation {
  DimensionVector n;
  DimensionVector m;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline Presentation min_presentation(const Representation& x) {
  Presentation pr;
  pr.n = top_vector(x);
  IntMatrix c = cartan_matrix(x.quiver);
  const std::size_t nv = x.quiver.num_vertices();
  std::vector<std::int64_t> v(nv, 0);
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t i = 0; i < nv; ++i) v[j] += c(j, i) * pr.n[i];
    v[j] -= x.dims[j];
  }
  auto m = solve_unimodular_integer(c, v);
  pr.m.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    if (m[i] < 0) throw std::logic_error("negative multiplicity in minimal presentation");
    pr.m[i] = static_cast<int>(m[i]);
  }
  return pr;
}

// Signed vertex set supp(n)+ and supp(m)-, ordered by (base index, sign).
inline std::vector<SignedVertex> presentation_subquiver(const Presentation& pr, const Quiver& q) {
  if (pr.n.size() != q.num_vertices() || pr.m.size() != q.num_vertices())
    throw std::invalid_argument("presentation size mismatch");
  std::vector<SignedVertex> out;
  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    if (pr.n[i] > 0) out.push_back({q.vertices()[i], Sign::plus});
    if (pr.m[i] > 0) out.push_back({q.vertices()[i], Sign::minus});
  }
  return out;
}

// Number of sincere indecomposable tau-rigid modules over the path algebra
// of a connected Dynkin quiver: the positive roots with full support. Each
// one is realized by generic sampling and its minimal presentation is
// validated, so p and seed participate without affecting the count.
inline long long count_tau_rigid_sincere(const Quiver& q, std::uint32_t p, std::uint64_t seed) {
  if (q.num_vertices() == 0) throw std::invalid_argument("empty quiver");
  Graph g = underlying_graph(q);
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("quiver is not connected");
  DynkinType type = classify_connected(g);
  if (!type.is_dynkin()) throw std::invalid_argument("not a Dynkin quiver: " + type.str());
  topological_order(q);  // rejects oriented cycles

  long long count = 0;
  auto roots = enumerate_positive_roots(g);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const DimensionVector& d = roots[r];
    if (std::any_of(d.begin(), d.end(), [](int di) { return di == 0; })) continue;
    Representation x = generic_indecomposable(q, d, p, mix_seed(seed, r));
    Presentation pr = min_presentation(x);
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      if (pr.n[i] > 0 && pr.m[i] > 0)
        throw std::logic_error("projective appears on both sides of a rigid presentation");
    ++count;
  }
  return count;
}

struct BreakdownEntry {
  SingleSubquiver subquiver;
  DynkinType type;
  long long sincere_count = 0;
};

struct TauRigidCount {
  bool finite = false;
  long long count = 0;  // meaningful iff finite
  std::vector<BreakdownEntry> breakdown;
  FinitenessDecision decision;
};

// Counts the indecomposable tau-rigid modules of KQ/J^2: infinite unless
// every single subquiver of the separated quiver is a union of Dynkin
// graphs, otherwise the sum over connected single subquivers (minus
// singletons excluded) of the sincere count on each.
inline TauRigidCount count_tau_rigid(const Quiver& q, std::uint32_t p, std::uint64_t seed) {
  TauRigidCount result;
  result.decision = is_tau_rigid_finite(q);
  result.finite = result.decision.finite;
  if (!result.finite) return result;

  auto subs = enumerate_s_plus(q);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    BreakdownEntry entry;
    entry.type = classify_connected(underlying_graph(subs[k].induced));
    entry.sincere_count = count_tau_rigid_sincere(subs[k].induced, p, mix_seed(seed, k));
    entry.subquiver = std::move(subs[k]);
    result.count += entry.sincere_count;
    result.breakdown.push_back(std::move(entry));
  }
  return result;
}

}  // namespace taurig
