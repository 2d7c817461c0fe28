#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mmp/approx.hpp"
#include "mmp/pair.hpp"

namespace mmp {

/// Degrees 0, I, 2I, ... of a graded dimension table, reindexed. Degree 0
/// is kept.
std::vector<Int> truncate(const std::vector<Int>& dims, std::size_t i);

/// Mobile parts M_m = Mob floor(m L), m = 1..horizon, on one fixed fan.
/// Degrees with no sections carry no mobile part.
class CharacteristicSequence {
 public:
  static CharacteristicSequence from_divisor(const Fan& fan, const TorusDivisor& l, std::size_t horizon);
  /// L = I (K + Delta).
  static CharacteristicSequence from_pair(const ToricPair& pair, const Int& i, std::size_t horizon);
  /// Explicit mobile divisors M_1, ..., M_N.
  static CharacteristicSequence from_mobile(const Fan& fan, std::vector<std::optional<TorusDivisor>> mobile);

  const Fan& fan() const { return fan_; }
  std::size_t horizon() const { return mobile_.size(); }
  /// M_m for 1 <= m <= horizon.
  const std::optional<TorusDivisor>& mobile(std::size_t m) const { return mobile_.at(m - 1); }
  /// D_m = M_m / m.
  std::optional<TorusDivisor> characteristic(std::size_t m) const;
  /// h0 of degree m (1 for m = 0).
  Int dimension(std::size_t m) const;

 private:
  Fan fan_;
  std::vector<std::optional<TorusDivisor>> mobile_;
  std::vector<Int> dims_;
};

struct StabilizationVerdict {
  std::optional<std::size_t> witness;  // least i with M_ik = k M_i for ik <= horizon
  std::size_t horizon = 0;
};

/// Least i with 2i <= horizon and M_{ik} = k M_i for all ik <= horizon.
StabilizationVerdict fg_test_stabilization(const CharacteristicSequence& seq, std::size_t horizon);

struct RestrictedAlgebraTable {
  std::vector<Int> dims;                  // h_0, ..., h_horizon
  std::vector<std::size_t> s_in_fixed_locus;  // degrees where every section vanishes on S
};

/// h_n = h0(floor(nD)) - h0(floor(nD) - S) for the ray S.
RestrictedAlgebraTable restricted_dims(const Fan& fan, const TorusDivisor& d, std::size_t s, std::size_t horizon);
/// The same for D = I(K + Delta) and S = floor(Delta), which must be a
/// single prime divisor.
RestrictedAlgebraTable restricted_dims(const ToricPair& pair, const Int& i, std::size_t horizon);

/// Data of an adjoint algebra on the affine line supported at one point.
struct AdjointSequenceA1 {
  Rat b;
  std::vector<Rat> d;  // d_1, ..., d_N
  RealNumber limit;

  /// Validates 0 <= b < 1, d_i >= 0, concavity and d_i <= d.
  static AdjointSequenceA1 make(Rat b, std::vector<Rat> d, RealNumber limit);
  std::size_t horizon() const { return d.size(); }
  const Rat& at(std::size_t i) const { return d.at(i - 1); }
  /// floor(1 / (1 - b)).
  Int q() const;
};

struct SaturationVerdict {
  bool saturated = true;
  std::size_t i = 0;  // violating pair; i = 0 marks the limit form
  std::size_t j = 0;
  bool limit_form = false;
};

SaturationVerdict saturation_check_a1(const AdjointSequenceA1& seq);

struct A1Generation {
  Int v;  // R^(v) = R(A^1, uP)
  Int u;
  Int q;
  std::size_t generator_degree;
  std::string statement;
};

struct RationalityRefutation {
  Int j;  // {j d} > b
  QuadReal frac;
};

/// Throws NotSaturated, ClaimViolation or InsufficientHorizon.
std::variant<A1Generation, RationalityRefutation> fg_a1(const AdjointSequenceA1& seq);

/// Mob ceil(j D_i + F) <= j D_j for horizon >= i >= j > 0.
SaturationVerdict saturation_check_toric(const CharacteristicSequence& seq, const TorusDivisor& f,
                                         std::size_t horizon);

struct FGCertificate {
  std::size_t j;
  TorusDivisor limit;
};

struct Inconclusive {
  std::size_t horizon;
  std::string reason;
};

using Fg6Verdict = std::variant<FGCertificate, ApproxCertificate, Inconclusive>;

/// Saturated + semiample => finitely generated, on one model. A declared
/// limit may be irrational; without one the limit is read off the
/// stabilization witness. Throws NotSaturated.
Fg6Verdict fg6_pipeline(const CharacteristicSequence& seq, const TorusDivisor& f,
                        const std::optional<std::vector<RealNumber>>& limit = std::nullopt,
                        const Int& search_cap = Int(100000));

}  // namespace mmp
