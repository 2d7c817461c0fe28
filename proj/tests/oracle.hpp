#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's LP, ILP, circuit or Mob code; only the fan combinatorics and the
// exact number types are shared.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mmp/pair.hpp"
#include "mmp/quad_real.hpp"

namespace oracle {

using mmp::Fan;
using mmp::Int;
using mmp::Rat;
using mmp::RatVec;
using mmp::TorusDivisor;
using Point = std::vector<std::int64_t>;

/// Bareiss determinant.
Int det(std::vector<std::vector<Int>> m);

/// Coordinates of v in the generators of cone c by Cramer's rule.
RatVec cramer(const Fan& fan, std::size_t c, const std::vector<Rat>& v);
/// A cone containing v and its nonnegative coordinates.
std::optional<std::pair<std::size_t, RatVec>> find_cone(const Fan& fan, const std::vector<Rat>& v);

/// Lattice points of P_{floor D} on a complete fan, by scanning a box
/// derived from the cone coordinates of the unit vectors.
std::vector<Point> points(const Fan& fan, const TorusDivisor& d);

/// min over sections of the vanishing order along each D_i; nullopt if |D| is empty.
std::optional<TorusDivisor> fix(const Fan& fan, const TorusDivisor& d);

/// D.C for the wall, from the relation among its rays normalised by
/// multiplicities computed with det().
Rat intersection(const Fan& fan, const TorusDivisor& d, const mmp::Wall& w);

/// max{t : H + t(K + Delta) nef} from oracle intersection numbers.
Rat nef_threshold(const mmp::ToricPair& pair, const TorusDivisor& h);

/// Log discrepancy of the primitive valuation v by explicit cone functionals.
std::optional<Rat> log_discrepancy(const mmp::ToricPair& pair, const std::vector<std::int64_t>& v);

/// Number of monomials of floor(nD) not vanishing on D_s.
std::size_t restriction_rank(const Fan& fan, const TorusDivisor& d, std::size_t s);

/// Least i with 2i <= horizon such that, for every ik <= horizon, the
/// k-fold sums of degree-i monomials have the same fixed part as degree ik.
std::optional<std::size_t> stabilization(const Fan& fan, const TorusDivisor& l, std::size_t horizon);

/// {j d} > b at 100 digits.
bool frac_exceeds(const Int& j, const mmp::QuadReal& d, const Rat& b);

/// Decimal value at 100 digits, as a string.
std::string decimal(const mmp::QuadReal& x);

/// |x| < eps and sign checks at 100 digits: returns -1, 0, +1 for x.
int sign100(const mmp::QuadReal& x);
bool abs_below100(const mmp::QuadReal& x, const Rat& eps);

}  // namespace oracle
