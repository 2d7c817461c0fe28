#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mmp/lattice.hpp"

namespace mmp {

/// <normal, x> >= offset, or = offset when `equality` is set.
struct HalfSpace {
  RatVec normal;
  Rat offset;
  bool equality = false;

  static HalfSpace at_least(const LatticeVec& v, const Rat& offset) { return {v.to_rat(), offset, false}; }
};

struct LpOptimum {
  Rat value;
  RatVec point;
  /// False when the optimum of a ratio program is only approached along a
  /// recession direction.
  bool attained = true;
};

struct Unbounded {};

using LpResult = std::variant<LpOptimum, Unbounded>;

/// Exact minimum of <objective, x> + constant over {x : constraints}.
/// Throws EmptyFeasible when the constraints are inconsistent.
LpResult lp_minimize(std::span<const HalfSpace> constraints, std::span<const Rat> objective,
                     const Rat& constant = Rat(0));

LpResult lp_maximize(std::span<const HalfSpace> constraints, std::span<const Rat> objective,
                     const Rat& constant = Rat(0));

/// Infimum of (<num, x> + num0) / (<den, x> + den0) over the polyhedron.
/// The denominator must be positive on the feasible set. Solved through the
/// Charnes-Cooper homogenisation.
LpResult lp_min_ratio(std::span<const HalfSpace> constraints, std::span<const Rat> num, const Rat& num0,
                      std::span<const Rat> den, const Rat& den0);

bool lp_feasible(std::span<const HalfSpace> constraints, std::size_t dim);

/// Exact minimum of <objective, x> over the integer points of a bounded
/// polyhedron, by LP-based branch and bound. nullopt when there is no
/// integer point. With `integral_objective` the bound is rounded up.
std::optional<Rat> ilp_minimize(std::span<const HalfSpace> constraints, std::span<const Rat> objective,
                                bool integral_objective = true);

/// Is `target` a nonnegative combination of `generators`?
bool in_cone(std::span<const RatVec> generators, std::span<const Rat> target);

}  // namespace mmp
