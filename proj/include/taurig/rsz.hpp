#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taurig/hereditary.hpp"
#include "taurig/linalg.hpp"
#include "taurig/quiver.hpp"
#include "taurig/single_subquiver.hpp"

namespace taurig {

// Module over KQ/J^2: a representation whose composable arrow maps all
// multiply to zero.
struct RszModule {
  Representation rep;
};

// A representation of Q is a KQ/J^2 module iff M_b M_a = 0 for every
// composable pair a: i -> j, b: j -> k.
inline bool satisfies_rad_square_zero(const Representation& r) {
  for (std::size_t a = 0; a < r.quiver.num_arrows(); ++a)
    for (std::size_t b = 0; b < r.quiver.num_arrows(); ++b) {
      if (r.quiver.arrow_dst(a) != r.quiver.arrow_src(b)) continue;
      FpMatrix prod = mul(r.arrow_maps[b], r.arrow_maps[a]);
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
          if (prod(i, j) != 0) return false;
    }
  return true;
}

inline RszModule make_rsz(Representation r) {
  check_shapes(r);
  if (!satisfies_rad_square_zero(r))
    throw std::invalid_argument("representation violates the radical square zero relations");
  return {std::move(r)};
}

namespace detail {

// Basis of P(i) at vertex j: the generator e_i first (when j == i), then
// the arrows i -> j in declaration order. Length two paths are zero.
inline int projective_local_dim(const Quiver& q, int i, int j) {
  int d = i == j ? 1 : 0;
  for (std::size_t k = 0; k < q.num_arrows(); ++k)
    if (q.arrow_src(k) == i && q.arrow_dst(k) == j) ++d;
  return d;
}

// Position of arrow b's basis element inside P(i)'s basis at dst(b).
inline int arrow_local_index(const Quiver& q, int i, std::size_t b) {
  int at = i == q.arrow_dst(b) ? 1 : 0;
  for (std::size_t k = 0; k < b; ++k)
    if (q.arrow_src(k) == i && q.arrow_dst(k) == q.arrow_dst(b)) ++at;
  return at;
}

}  // namespace detail

// Direct sum of indecomposable projectives P(i)^{mult_i} over KQ/J^2 with a
// canonical basis layout: at each vertex, the P(0) copies first, then P(1),
// and so on, each copy contiguous.
struct ProjectiveSum {
  RszModule module;
  DimensionVector mult;
  std::vector<std::vector<int>> block_start;  // [j][i] first coordinate of the P(i) copies at j
  std::vector<std::vector<int>> local_dim;    // [j][i] dim of one P(i) copy at j

  // Coordinate of basis element `local` of copy (i, c) inside vertex j.
  int coord(int j, int i, int c, int local) const {
    return block_start[j][i] + c * local_dim[j][i] + local;
  }

  int generator_coord(int i, int c) const { return coord(i, i, c, 0); }
};

inline ProjectiveSum projective_sum(const Quiver& q, const DimensionVector& mult,
                                    std::uint32_t p) {
  const int n = static_cast<int>(q.num_vertices());
  if (static_cast<int>(mult.size()) != n) throw std::invalid_argument("multiplicity size mismatch");
  for (int m : mult)
    if (m < 0) throw std::invalid_argument("negative multiplicity");

  ProjectiveSum sum;
  sum.mult = mult;
  sum.block_start.assign(n, std::vector<int>(n, 0));
  sum.local_dim.assign(n, std::vector<int>(n, 0));
  Representation rep;
  rep.quiver = q;
  rep.p = p;
  rep.dims.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int at = 0;
    for (int i = 0; i < n; ++i) {
      sum.block_start[j][i] = at;
      sum.local_dim[j][i] = detail::projective_local_dim(q, i, j);
      at += mult[i] * sum.local_dim[j][i];
    }
    rep.dims[j] = at;
  }

  // Arrow b: j -> k sends the generator of each P(j) copy to its arrow
  // element at k and every arrow element to zero.
  for (std::size_t b = 0; b < q.num_arrows(); ++b) {
    const int j = q.arrow_src(b);
    const int k = q.arrow_dst(b);
    FpMatrix m(rep.dims[k], rep.dims[j], p);
    const int elt = detail::arrow_local_index(q, j, b);
    for (int c = 0; c < mult[j]; ++c)
      m(sum.coord(k, j, c, elt), sum.coord(j, j, c, 0)) = 1;
    rep.arrow_maps.push_back(std::move(m));
  }

  sum.module.rep = std::move(rep);
  return sum;
}

inline RszModule projective_module(const Quiver& q, int vertex, std::uint32_t p) {
  if (vertex < 0 || vertex >= static_cast<int>(q.num_vertices()))
    throw std::invalid_argument("vertex index out of range");
  DimensionVector mult(q.num_vertices(), 0);
  mult[vertex] = 1;
  return projective_sum(q, mult, p).module;
}

namespace detail {

// Canonical splitting of each X_i into radical and top coordinates. The
// radical part XJ_i is the column space of the concatenated incoming arrow
// maps; its basis comes from the echelon form of the transpose, and the
// standard vectors at the non-pivot coordinates lift a basis of the top.
struct RadicalSplit {
  std::vector<FpMatrix> radical_basis;      // per vertex, dims[i] x r_i
  std::vector<std::vector<int>> top_coords; // per vertex, dims[i] - r_i coordinates
};

inline RadicalSplit radical_split(const Representation& x) {
  const Quiver& q = x.quiver;
  const int n = static_cast<int>(q.num_vertices());
  RadicalSplit split;
  split.radical_basis.reserve(n);
  split.top_coords.resize(n);
  for (int i = 0; i < n; ++i) {
    std::size_t rows = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k)
      if (q.arrow_dst(k) == i) rows += x.dims[q.arrow_src(k)];
    FpMatrix t(rows, x.dims[i], x.p);  // transposed concatenation
    std::size_t at = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
      if (q.arrow_dst(k) != i) continue;
      const FpMatrix& m = x.arrow_maps[k];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(at + c, r) = m(r, c);
      at += m.cols();
    }
    auto pivots = rref(t);
    FpMatrix basis(x.dims[i], pivots.size(), x.p);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (int c = 0; c < x.dims[i]; ++c) basis(c, r) = t(r, c);
    split.radical_basis.push_back(std::move(basis));
    std::vector<char> hit(x.dims[i], 0);
    for (std::size_t pc : pivots) hit[pc] = 1;
    for (int c = 0; c < x.dims[i]; ++c)
      if (!hit[c]) split.top_coords[i].push_back(c);
  }
  return split;
}

}  // namespace detail

// Minimal projective presentation P1 --p--> P0 --q--> X -> 0 with explicit
// vertexwise matrices; n and m are the multiplicities of P0 and P1.
struct ExplicitPresentation {
  DimensionVector n;
  DimensionVector m;
  ProjectiveSum p0;
  ProjectiveSum p1;
  std::vector<FpMatrix> q_map;  // per vertex, X_j x (P0)_j
  std::vector<FpMatrix> p_map;  // per vertex, (P0)_j x (P1)_j
};

inline ExplicitPresentation min_projective_presentation(const RszModule& x) {
  check_shapes(x.rep);
  if (!satisfies_rad_square_zero(x.rep))
    throw std::invalid_argument("representation violates the radical square zero relations");
  const Quiver& q = x.rep.quiver;
  const std::uint32_t p = x.rep.p;
  const int n = static_cast<int>(q.num_vertices());

  ExplicitPresentation pres;
  auto split = detail::radical_split(x.rep);
  pres.n.resize(n);
  for (int i = 0; i < n; ++i) pres.n[i] = static_cast<int>(split.top_coords[i].size());
  pres.p0 = projective_sum(q, pres.n, p);

  // The cover q sends the generator of copy (i, c) to the c-th lifted top
  // vector u and the arrow element of b: i -> j to M_b u.
  for (int j = 0; j < n; ++j)
    pres.q_map.emplace_back(x.rep.dims[j], pres.p0.module.rep.dims[j], p);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < pres.n[i]; ++c) {
      const int u = split.top_coords[i][c];
      pres.q_map[i](u, pres.p0.generator_coord(i, c)) = 1;
      for (std::size_t b = 0; b < q.num_arrows(); ++b) {
        if (q.arrow_src(b) != i) continue;
        const int j = q.arrow_dst(b);
        const int col = pres.p0.coord(j, i, c, detail::arrow_local_index(q, i, b));
        for (int r = 0; r < x.rep.dims[j]; ++r) pres.q_map[j](r, col) = x.rep.arrow_maps[b](r, u);
      }
    }
  }

  // The kernel of a vertexwise surjection is computed vertexwise; it sits
  // inside rad P0, is killed by J, and is covered by simples placed at the
  // generator of each P1 copy.
  pres.m.resize(n);
  std::vector<std::vector<std::vector<std::uint32_t>>> kernels(n);
  for (int j = 0; j < n; ++j) {
    if (rank(pres.q_map[j]) != static_cast<std::size_t>(x.rep.dims[j]))
      throw std::logic_error("projective cover is not surjective");
    kernels[j] = nullspace_basis(pres.q_map[j]);
    pres.m[j] = static_cast<int>(kernels[j].size());
  }
  pres.p1 = projective_sum(q, pres.m, p);

  for (int j = 0; j < n; ++j)
    pres.p_map.emplace_back(pres.p0.module.rep.dims[j], pres.p1.module.rep.dims[j], p);
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < pres.m[j]; ++c) {
      const auto& vec = kernels[j][c];
      for (int i = 0; i < n; ++i)
        for (int cc = 0; cc < pres.n[i]; ++cc)
          if (i == j && vec[pres.p0.generator_coord(i, cc)] != 0)
            throw std::logic_error("kernel of the cover leaves the radical");
      const int col = pres.p1.generator_coord(j, c);
      for (std::size_t r = 0; r < vec.size(); ++r) pres.p_map[j](r, col) = vec[r];
    }
  }
  return pres;
}

// Hom(X, tau X) = 0 via the surjectivity criterion: X is tau-rigid iff
// composing with p maps Hom(P0, X) onto Hom(P1, X).
inline bool is_tau_rigid(const RszModule& x) {
  ExplicitPresentation pres = min_projective_presentation(x);
  auto h0 = hom_space(pres.p0.module.rep, x.rep);
  auto h1 = hom_space(pres.p1.module.rep, x.rep);
  if (h1.empty()) return true;

  const int n = static_cast<int>(x.rep.quiver.num_vertices());
  std::size_t flat = 0;
  for (int j = 0; j < n; ++j)
    flat += static_cast<std::size_t>(x.rep.dims[j]) * pres.p1.module.rep.dims[j];

  FpMatrix images(flat, h0.size(), x.rep.p);
  for (std::size_t h = 0; h < h0.size(); ++h) {
    std::size_t at = 0;
    for (int j = 0; j < n; ++j) {
      FpMatrix comp = mul(h0[h][j], pres.p_map[j]);
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < comp.cols(); ++c) images(at + r * comp.cols() + c, h) = comp(r, c);
      at += comp.rows() * comp.cols();
    }
  }
  return rank(images) == h1.size();
}

using SeparatedModule = Representation;

// F X = (X/XJ, XJ) as a representation of the separated quiver: the top
// sits at the plus vertices, the radical at the minus vertices, and arrow
// a: i -> j acts by M_a on top representatives, expressed in the canonical
// radical basis at j.
inline SeparatedModule separation_functor(const RszModule& x) {
  check_shapes(x.rep);
  if (!satisfies_rad_square_zero(x.rep))
    throw std::invalid_argument("representation violates the radical square zero relations");
  const Quiver& q = x.rep.quiver;
  const int n = static_cast<int>(q.num_vertices());
  auto split = detail::radical_split(x.rep);

  SeparatedModule fx;
  fx.quiver = separated_quiver(q);
  fx.p = x.rep.p;
  fx.dims.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    fx.dims[i] = static_cast<int>(split.top_coords[i].size());
    fx.dims[n + i] = static_cast<int>(split.radical_basis[i].cols());
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const int i = q.arrow_src(a);
    const int j = q.arrow_dst(a);
    FpMatrix m(fx.dims[n + j], fx.dims[i], fx.p);
    for (int c = 0; c < fx.dims[i]; ++c) {
      std::vector<std::uint32_t> y(x.rep.dims[j]);
      for (int r = 0; r < x.rep.dims[j]; ++r)
        y[r] = x.rep.arrow_maps[a](r, split.top_coords[i][c]);
      auto gamma = solve(split.radical_basis[j], y);
      if (!gamma) throw std::logic_error("arrow image escapes the radical");
      for (std::size_t r = 0; r < gamma->size(); ++r) m(r, c) = (*gamma)[r];
    }
    fx.arrow_maps.push_back(std::move(m));
  }
  return fx;
}

// The separation criterion: X is tau-rigid iff F X is rigid over the
// hereditary separated quiver and no projective appears on both sides of
// the minimal presentation. Returns whether the two sides agree.
inline bool crosscheck_separation(const RszModule& x) {
  bool direct = is_tau_rigid(x);
  ExplicitPresentation pres = min_projective_presentation(x);
  bool disjoint = true;
  for (std::size_t i = 0; i < pres.n.size(); ++i)
    if (pres.n[i] > 0 && pres.m[i] > 0) disjoint = false;
  bool via_separation = disjoint && is_rigid_hereditary(separation_functor(x));
  return direct == via_separation;
}

namespace detail {

inline void check_enumeration_budget(double log2_count, const char* what) {
  if (log2_count > 24.0) throw std::invalid_argument(std::string(what) + " budget exceeded");
}

// All nonzero endomorphism-space elements, streamed as coefficient vectors.
template <typename Fn>
bool for_each_combination(std::size_t k, std::uint32_t p, Fn&& fn) {
  std::vector<std::uint32_t> coeff(k, 0);
  for (;;) {
    std::size_t i = k;
    while (i > 0 && coeff[i - 1] == p - 1) coeff[--i] = 0;
    if (i == 0) return false;
    ++coeff[i - 1];
    if (fn(coeff)) return true;
  }
}

inline std::vector<FpMatrix> combine(const std::vector<std::vector<FpMatrix>>& basis,
                                     const std::vector<std::uint32_t>& coeff,
                                     const Representation& shape) {
  const int n = static_cast<int>(shape.quiver.num_vertices());
  std::vector<FpMatrix> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    FpMatrix m(basis.empty() ? 0 : basis[0][i].rows(),
               basis.empty() ? 0 : basis[0][i].cols(), shape.p);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m(r, c) = fp::add(m(r, c), fp::mul(coeff[b], basis[b][i](r, c), shape.p), shape.p);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

// Exhaustive nontrivial-idempotent search in End(X). Indecomposability over
// a field is equivalent to End(X) having no idempotents besides 0 and 1.
inline bool is_indecomposable(const RszModule& x) {
  const int n = static_cast<int>(x.rep.quiver.num_vertices());
  long long total = std::accumulate(x.rep.dims.begin(), x.rep.dims.end(), 0LL);
  if (total == 0) return false;
  auto basis = hom_space(x.rep, x.rep);
  detail::check_enumeration_budget(basis.size() * std::log2(double(x.rep.p)),
                                   "idempotent search");
  bool found = detail::for_each_combination(basis.size(), x.rep.p, [&](const auto& coeff) {
    auto phi = detail::combine(basis, coeff, x.rep);
    bool is_zero = true, is_id = true, idem = true;
    for (int i = 0; i < n && idem; ++i) {
      FpMatrix sq = mul(phi[i], phi[i]);
      if (!(sq == phi[i])) idem = false;
      if (!(phi[i] == FpMatrix(phi[i].rows(), phi[i].cols(), x.rep.p))) is_zero = false;
      if (!(phi[i] == FpMatrix::identity(phi[i].rows(), x.rep.p))) is_id = false;
    }
    return idem && !is_zero && !is_id;
  });
  return !found;
}

inline bool is_isomorphic(const RszModule& x, const RszModule& y) {
  if (!(x.rep.quiver == y.rep.quiver) || x.rep.p != y.rep.p) return false;
  if (x.rep.dims != y.rep.dims) return false;
  auto basis = hom_space(x.rep, y.rep);
  detail::check_enumeration_budget(basis.size() * std::log2(double(x.rep.p)),
                                   "isomorphism search");
  const int n = static_cast<int>(x.rep.quiver.num_vertices());
  return detail::for_each_combination(basis.size(), x.rep.p, [&](const auto& coeff) {
    auto phi = detail::combine(basis, coeff, x.rep);
    for (int i = 0; i < n; ++i)
      if (rank(phi[i]) != phi[i].rows()) return false;
    return true;
  });
}

struct OracleBounds {
  int max_per_vertex = 2;
  int max_total = 5;
};

// One representative per isomorphism class of indecomposable KQ/J^2 modules
// with dims[i] <= max_per_vertex and total dimension <= max_total, by
// exhaustive matrix enumeration over F_p. Deterministic: dimension vectors
// ascend lexicographically and the first representative found is kept.
inline std::vector<RszModule> enumerate_indecomposables(const Quiver& q, std::uint32_t p,
                                                        OracleBounds bounds) {
  if (bounds.max_per_vertex < 0 || bounds.max_total < 0)
    throw std::invalid_argument("negative oracle bound");
  const int n = static_cast<int>(q.num_vertices());
  std::vector<RszModule> classes;

  DimensionVector d(n, 0);
  for (;;) {
    int i = n - 1;
    while (i >= 0 && d[i] == bounds.max_per_vertex) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total == 0 || total > bounds.max_total) continue;

    std::size_t entries = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k)
      entries += static_cast<std::size_t>(d[q.arrow_dst(k)]) * d[q.arrow_src(k)];
    detail::check_enumeration_budget(entries * std::log2(double(p)), "oracle enumeration");

    Representation rep;
    rep.quiver = q;
    rep.p = p;
    rep.dims = d;
    for (std::size_t k = 0; k < q.num_arrows(); ++k)
      rep.arrow_maps.emplace_back(d[q.arrow_dst(k)], d[q.arrow_src(k)], p);

    std::vector<std::uint32_t> cell(entries, 0);
    for (bool first = true;; first = false) {
      if (!first) {
        std::size_t j = entries;
        while (j > 0 && cell[j - 1] == p - 1) cell[--j] = 0;
        if (j == 0) break;
        ++cell[j - 1];
      }
      std::size_t at = 0;
      for (std::size_t k = 0; k < q.num_arrows(); ++k)
        for (std::size_t r = 0; r < rep.arrow_maps[k].rows(); ++r)
          for (std::size_t c = 0; c < rep.arrow_maps[k].cols(); ++c)
            rep.arrow_maps[k](r, c) = cell[at++];

      if (!satisfies_rad_square_zero(rep)) continue;
      RszModule candidate{rep};
      if (!is_indecomposable(candidate)) continue;
      bool known = false;
      for (const RszModule& seen : classes) {
        if (seen.rep.dims != d) continue;
        if (is_isomorphic(seen, candidate)) {
          known = true;
          break;
        }
      }
      if (!known) classes.push_back(std::move(candidate));
      if (entries == 0) break;
    }
  }
  return classes;
}

// The enumeration bounds capture every indecomposable iff the algebra is
// representation finite and every positive root of every separated-quiver
// component fits: an indecomposable with separated dimension vector r has
// dims[i] = r[i+] + r[i-].
inline bool oracle_bounds_complete(const Quiver& q, OracleBounds bounds) {
  if (!is_representation_finite(q).finite) return false;
  const int n = static_cast<int>(q.num_vertices());
  const Quiver qs = separated_quiver(q);
  Graph g = underlying_graph(qs);
  std::vector<int> base(2 * n);
  for (int i = 0; i < 2 * n; ++i) base[i] = i < n ? i : i - n;

  for (const Graph& comp : connected_components(g)) {
    std::vector<int> comp_base;
    for (const auto& name : comp.vertices)
      comp_base.push_back(base[qs.vertex_index(name)]);
    for (const DimensionVector& r : enumerate_positive_roots(comp)) {
      std::vector<int> per_vertex(n, 0);
      long long total = 0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        per_vertex[comp_base[k]] += r[k];
        total += r[k];
      }
      if (total > bounds.max_total) return false;
      for (int i = 0; i < n; ++i)
        if (per_vertex[i] > bounds.max_per_vertex) return false;
    }
  }
  return true;
}

}  // namespace taurig
