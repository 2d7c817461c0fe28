#include "mmp/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "mmp/error.hpp"

namespace mmp {

bool LatticeVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool LatticeVec::is_primitive() const {
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  return g == 1;
}

RatVec LatticeVec::to_rat() const {
  RatVec out;
  out.reserve(coords_.size());
  for (auto c : coords_) out.emplace_back(static_cast<long>(c));
  return out;
}

LatticeVec LatticeVec::operator+(const LatticeVec& o) const {
  LatticeVec r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

LatticeVec LatticeVec::operator-(const LatticeVec& o) const {
  LatticeVec r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

LatticeVec LatticeVec::operator*(std::int64_t k) const {
  LatticeVec r = *this;
  for (auto& c : r.coords_) c *= k;
  return r;
}

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

LatticeVec primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, c);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  std::vector<std::int64_t> out(v.begin(), v.end());
  for (auto& c : out) c /= g;
  return LatticeVec(std::move(out));
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(std::span<const Rat> a, const LatticeVec& v) {
  if (a.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (v[i] != 0) s += a[i] * Rat(static_cast<long>(v[i]));
  return s;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rat inv = m[row][c].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const Rat f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rat inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rat f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<RatVec> solve_square(RatMatrix a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto piv = rref(a, n);
  if (piv.size() < n) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<RatVec> kernel(const RatMatrix& a, std::size_t cols) {
  RatMatrix m = a;
  const auto piv = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = Rat(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& a, std::size_t cols) {
  // Column-style Hermite reduction: A V = [H | 0] with V unimodular; the
  // columns of V paired with zero columns span the saturated kernel.
  std::vector<std::vector<Int>> m = a;
  std::vector<std::vector<Int>> v(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {  // col dst -= f * col src
    for (auto& row : m) row[dst] -= f * row[src];
    for (auto& row : v) row[dst] -= f * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : m) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.size() && lead < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (best == cols || abs(m[r][c]) < abs(m[r][best]))) best = c;
      if (best == cols) break;
      col_swap(lead, best);
      bool done = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][lead].get_mpz_t());
        col_op(c, lead, q);
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = lead; c < cols; ++c) {
    std::vector<Int> col(cols);
    for (std::size_t i = 0; i < cols; ++i) col[i] = v[i][c];
    basis.push_back(std::move(col));
  }
  return basis;
}

Int lattice_multiplicity(std::span<const LatticeVec> vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  const std::size_t n = vectors[0].size();
  Int g = 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    RatMatrix minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = Rat(static_cast<long>(vectors[i][cols[j]]));
    g = gcd(g, determinant(minor).num());
    // next combination
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  if (g == 0) throw Error(ErrorCode::InvalidFan, "linearly dependent generators");
  return abs(g);
}

std::vector<Int> primitive_integer(std::span<const Rat> v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  std::vector<Int> out;
  Int g = 0;
  for (const auto& x : v) {
    out.push_back((x * Rat(l)).num());
    g = gcd(g, out.back());
  }
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  for (auto& x : out) x /= abs(g);
  return out;
}

}  // namespace mmp
