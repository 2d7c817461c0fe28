#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "mmp/fan.hpp"

namespace mmp {

/// D = sum a_i D_i over the rays of a fan.
class TorusDivisor {
 public:
  TorusDivisor() = default;
  explicit TorusDivisor(RatVec coeffs) : coeffs_(std::move(coeffs)) {}
  static TorusDivisor zero(std::size_t n) { return TorusDivisor(RatVec(n)); }
  static TorusDivisor prime(std::size_t n, std::size_t i);

  std::size_t size() const { return coeffs_.size(); }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  const RatVec& coeffs() const { return coeffs_; }

  bool is_integral() const;
  bool is_effective() const;
  bool is_zero() const;
  TorusDivisor floor() const;
  TorusDivisor ceil() const;
  /// Smallest positive integer k with k D integral.
  Int denominator() const;
  /// Coefficients with index `skip` removed (push-forward along a ray removal).
  TorusDivisor without(std::size_t skip) const;

  TorusDivisor operator-() const;
  TorusDivisor& operator+=(const TorusDivisor& o);
  TorusDivisor& operator-=(const TorusDivisor& o);
  friend TorusDivisor operator+(TorusDivisor a, const TorusDivisor& b) { return a += b; }
  friend TorusDivisor operator-(TorusDivisor a, const TorusDivisor& b) { return a -= b; }
  friend TorusDivisor operator*(const Rat& k, const TorusDivisor& d);

  /// Coefficientwise order.
  bool operator<=(const TorusDivisor& o) const;
  friend bool operator==(const TorusDivisor&, const TorusDivisor&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TorusDivisor& d);

 private:
  RatVec coeffs_;
};

/// Per-cone Cartier data: m_sigma with <m_sigma, v_i> = -a_i for i in sigma.
RatVec cartier_data(const Fan& fan, const TorusDivisor& d, std::size_t cone);

/// Q-Cartier D is Cartier iff every m_sigma is integral.
bool is_cartier(const Fan& fan, const TorusDivisor& d);

/// D.C for the compact curve of an interior wall.
Rat intersection_number(const Fan& fan, const TorusDivisor& d, const Wall& w);

/// (D_rho . C)_rho: the numerical class of the wall curve.
RatVec wall_class(const Fan& fan, const Wall& w);

bool is_nef(const Fan& fan, const TorusDivisor& d);
bool is_ample(const Fan& fan, const TorusDivisor& d);
/// Support function of D is strictly convex: each m_sigma cuts out exactly
/// the rays of sigma.
bool support_strictly_convex(const Fan& fan, const TorusDivisor& d);
/// Every m_sigma is a lattice point of the polytope P_D (integral D).
bool is_globally_generated(const Fan& fan, const TorusDivisor& d);

/// P_D = { m : <m, v_i> >= -a_i }, lattice points taken for floor(D).
class DivisorPolytope {
 public:
  DivisorPolytope(const Fan& fan, const TorusDivisor& d);

  /// Dimension of the real polytope, or -1 when empty.
  int dimension() const;
  const std::vector<std::vector<std::int64_t>>& lattice_points() const;
  std::size_t count() const { return lattice_points().size(); }

  static constexpr std::size_t kMaxCandidates = 1'000'000;

 private:
  const Fan* fan_;
  TorusDivisor d_;
  mutable std::optional<std::vector<std::vector<std::int64_t>>> points_;
};

/// dim H^0(X, O(D)) for integral D on a complete fan.
std::size_t h0(const Fan& fan, const TorusDivisor& d);

bool is_big(const Fan& fan, const TorusDivisor& d);

struct MobFix {
  TorusDivisor mob;
  TorusDivisor fix;
};

/// Mobile and fixed parts of |D|. Throws EmptyLinearSystem when h0 = 0.
MobFix mob_fix(const Fan& fan, const TorusDivisor& d);

}  // namespace mmp
