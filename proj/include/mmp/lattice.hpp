#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "mmp/rational.hpp"

namespace mmp {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

/// Integer point of the cocharacter lattice N (or of M, depending on use).
class LatticeVec {
 public:
  LatticeVec() = default;
  LatticeVec(std::initializer_list<std::int64_t> c) : coords_(c) {}
  explicit LatticeVec(std::vector<std::int64_t> c) : coords_(std::move(c)) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_primitive() const;
  RatVec to_rat() const;

  LatticeVec operator+(const LatticeVec& o) const;
  LatticeVec operator-(const LatticeVec& o) const;
  LatticeVec operator*(std::int64_t k) const;

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v);

 private:
  std::vector<std::int64_t> coords_;
};

/// v / gcd(v). Throws ZeroVector on v = 0.
LatticeVec primitive(std::span<const std::int64_t> v);
inline LatticeVec primitive(const LatticeVec& v) { return primitive(std::span(v.coords())); }

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Rat dot(std::span<const Rat> a, const LatticeVec& v);

std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);
/// Unique solution of the square system A x = b, if A is invertible.
std::optional<RatVec> solve_square(RatMatrix a, RatVec b);
/// Basis of {x : A x = 0} (A given row-wise, with `cols` columns).
std::vector<RatVec> kernel(const RatMatrix& a, std::size_t cols);

/// Basis of the saturated integer lattice {x in Z^cols : A x = 0}.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& a, std::size_t cols);

/// Index of the sublattice spanned by `vectors` inside its saturation, i.e.
/// the gcd of the maximal minors. Vectors must be linearly independent.
Int lattice_multiplicity(std::span<const LatticeVec> vectors);

/// Clears denominators and divides by the content: the primitive integer
/// vector on the ray of a nonzero rational vector.
std::vector<Int> primitive_integer(std::span<const Rat> v);

}  // namespace mmp
