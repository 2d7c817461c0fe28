#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mmp/lattice.hpp"

namespace mmp {

/// Sorted ray indices of a simplicial cone.
using Cone = std::vector<std::size_t>;

/// A codimension-one cone shared by two maximal cones, together with the
/// integral linear relation among its rays and the two opposite rays.
struct Wall {
  std::size_t left_cone;
  std::size_t right_cone;
  Cone shared;
  std::size_t left_ray;   // ray of left_cone not in the wall
  std::size_t right_ray;  // ray of right_cone not in the wall
  /// sum_i circuit[i] v_i = 0 over all rays of the fan; zero outside
  /// shared + {left_ray, right_ray}; gcd 1; opposite rays positive.
  std::vector<Int> circuit;
  Int multiplicity;  // index of the wall's rays in their saturated lattice

  /// Rays involved in the relation, sorted.
  Cone rays() const;
};

/// Simplicial fan in Z^rank. Every listed cone is full-dimensional. Complete
/// fans describe proper toric varieties; a non-complete fan describes a
/// toric variety over an affine base and only its interior walls carry
/// compact curves.
class Fan {
 public:
  Fan() = default;

  /// Validates primitivity, simpliciality and that cones meet along faces.
  static Fan make(std::size_t rank, std::vector<LatticeVec> rays, std::vector<Cone> cones);

  std::size_t rank() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<LatticeVec>& rays() const { return rays_; }
  const LatticeVec& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<Wall>& walls() const { return walls_; }

  bool is_complete() const { return complete_; }
  bool is_smooth() const;
  /// rank of the divisor class group tensor Q: #rays - rank.
  std::size_t picard_number() const { return rays_.size() - rank_; }

  const Int& cone_multiplicity(std::size_t c) const { return cone_mult_[c]; }

  /// Solves v = sum t_i v_i over the generators of cone c (in cone order).
  RatVec cone_coordinates(std::size_t c, std::span<const Rat> v) const;
  /// Linear functional m with <m, v_i> = values[i] for i in cone c.
  RatVec cone_functional(std::size_t c, std::span<const Rat> values) const;

  /// Index of a maximal cone containing v together with its coordinates.
  std::optional<std::pair<std::size_t, RatVec>> locate(std::span<const Rat> v) const;

  /// True when `face` (sorted) is contained in some maximal cone.
  bool is_face(const Cone& face) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  void build_walls();

  std::size_t rank_ = 0;
  std::vector<LatticeVec> rays_;
  std::vector<Cone> cones_;
  std::vector<Wall> walls_;
  std::vector<Int> cone_mult_;
  std::vector<RatMatrix> inverse_;  // inverse of the generator matrix (rows = rays)
  bool complete_ = false;
};

}  // namespace mmp
