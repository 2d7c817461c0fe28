#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mmp/adjoint.hpp"
#include "mmp/approx.hpp"
#include "mmp/pair.hpp"
#include "mmp/strip.hpp"

namespace mmp::corpus {

using Rng = std::mt19937_64;

Fan projective_space(std::size_t n);
Fan hirzebruch(std::int64_t a);
/// Product of two complete fans.
Fan product(const Fan& x, const Fan& y);
/// Stellar subdivision of a smooth fan at the sum of the rays of `face`.
Fan blow_up(const Fan& fan, const Cone& face);

struct NamedFan {
  std::string name;
  Fan fan;
};

/// Random toric blowups of P^2, P^1 x P^1 and F_a at fixed points.
std::vector<NamedFan> smooth_surfaces(std::size_t count, Rng& rng, std::size_t max_blowups = 4);
/// Random blowups of P^3, (P^1)^3 and P^2 x P^1 at fixed points and
/// invariant curves.
std::vector<NamedFan> smooth_threefolds(std::size_t count, Rng& rng, std::size_t max_blowups = 2);

/// An integral ample divisor from a random vertex of {D . C >= 1 on all walls}.
TorusDivisor ample_divisor(const Fan& fan, Rng& rng);

/// Boundary with coefficients in {0} u {k/den : 0 < k < den}, den <= max_den.
TorusDivisor klt_boundary(const Fan& fan, Rng& rng, long max_den = 4);

/// Saturated A^1 tables d_j = floor(j d)/j with d = u/v, v <= q.
AdjointSequenceA1 rational_a1(Rng& rng);
/// Tables for a quadratic irrational limit cut just before the first j with
/// {j d} > b, so the finite saturation inequalities hold.
AdjointSequenceA1 quadratic_a1(Rng& rng);

/// Instance over Q(sqrt disc) with the given eps.
ApproxInstance approx_instance(Rng& rng, long disc, const Rat& eps);

struct PlantedStrip {
  Poly2 p;
  int n;
  Int a;
  Rat r;
  Rat eps;
  std::int64_t bound;
  std::vector<LinearFactor> planted;
};
/// P vanishing on every strip line with lattice points in the box, times a
/// random cofactor.
PlantedStrip planted_strip(Rng& rng);

}  // namespace mmp::corpus
