#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace taurig {

// Dense matrix over the prime field F_p. Entries are kept reduced mod p.
class FpMatrix {
 public:
  FpMatrix() : rows_(0), cols_(0), p_(2) {}

  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  }

  static FpMatrix identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return p_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, std::uint64_t value) {
    data_[i * cols_ + j] = static_cast<std::uint32_t>(value % p_);
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t{p} - b);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::invalid_argument("division by zero mod p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::invalid_argument("modulus is not prime or element not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace fp

inline FpMatrix mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  if (a.prime() != b.prime()) throw std::invalid_argument("matrix modulus mismatch");
  const std::uint32_t p = a.prime();
  FpMatrix c(a.rows(), b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = fp::add(c(i, j), fp::mul(aik, b(k, j), p), p);
    }
  return c;
}

namespace detail {

// In-place reduced row echelon form. Pivot choice is deterministic: columns
// scanned left to right, pivot row is the first row at or below the cursor
// with a nonzero entry. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(FpMatrix& m) {
  const std::uint32_t p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    std::uint32_t s = fp::inv(m(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = fp::mul(m(row, j), s, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      std::uint32_t f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = fp::sub(m(i, j), fp::mul(f, m(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(FpMatrix m) { return detail::rref(m).size(); }

// Canonical solution of A x = b: free variables are set to zero.
inline std::optional<std::vector<std::uint32_t>> solve(const FpMatrix& a,
                                                       const std::vector<std::uint32_t>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right hand side size mismatch");
  const std::uint32_t p = a.prime();
  FpMatrix aug(a.rows(), a.cols() + 1, p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % p;
  }
  auto pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<std::uint32_t> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

// Canonical nullspace basis from the reduced row echelon form: one vector
// per free column f, with x_f = 1 and zeros at the other free columns.
inline std::vector<std::vector<std::uint32_t>> nullspace_basis(const FpMatrix& a) {
  const std::uint32_t p = a.prime();
  FpMatrix m = a;
  auto pivots = detail::rref(m);
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fp::neg(m(r, f), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Dense integer matrix, used for Cartan matrices of acyclic quivers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

namespace detail {

inline std::int64_t checked_i64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer elimination overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Solves C x = v exactly over the integers for square C with det = +-1,
// by fraction free (Bareiss) elimination. Throws std::invalid_argument if
// C is not unimodular and std::logic_error if back substitution hits a
// non-exact division, which cannot happen for unimodular C.
inline std::vector<std::int64_t> solve_unimodular_integer(const IntMatrix& c,
                                                          const std::vector<std::int64_t>& v) {
  const std::size_t n = c.rows();
  if (c.cols() != n) throw std::invalid_argument("matrix is not square");
  if (v.size() != n) throw std::invalid_argument("right hand side size mismatch");
  if (n == 0) return {};

  IntMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c(i, j);
    m(i, n) = v[i];
  }

  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("matrix is not unimodular");
    if (pivot != k) {
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(pivot, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        __int128 num = static_cast<__int128>(m(i, j)) * m(k, k) -
                       static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = detail::checked_i64(num / prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }

  std::int64_t det = sign * m(n - 1, n - 1);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");

  std::vector<std::int64_t> x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    __int128 acc = m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= static_cast<__int128>(m(i, j)) * x[j];
    if (acc % m(i, i) != 0) throw std::logic_error("non-exact division in back substitution");
    x[i] = detail::checked_i64(acc / m(i, i));
  }
  return x;
}

}  // namespace taurig
