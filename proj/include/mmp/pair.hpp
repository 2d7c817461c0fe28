#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mmp/divisor.hpp"

namespace mmp {

/// (X, Delta) with X given by a simplicial fan. Coefficients outside [0, 1]
/// are accepted so that sub-boundaries and non-lc inputs can be classified;
/// is_boundary() tells the two apart.
class ToricPair {
 public:
  ToricPair() = default;
  ToricPair(Fan fan, TorusDivisor boundary);
  static ToricPair trivial(Fan fan);

  const Fan& fan() const { return fan_; }
  const TorusDivisor& boundary() const { return boundary_; }
  bool is_boundary() const;
  /// K_X + Delta.
  TorusDivisor log_canonical() const;

 private:
  Fan fan_;
  TorusDivisor boundary_;
};

/// K_X = -sum D_i.
TorusDivisor canonical_divisor(const Fan& fan);

/// Log discrepancy a(v) + 1 of the toric valuation v: the PL function with
/// value 1 - d_i on the ray generators.
Rat log_discrepancy(const ToricPair& pair, const LatticeVec& v);
/// a(E_v, X, Delta). Throws OutsideSupport when v is not in the fan.
Rat discrepancy(const ToricPair& pair, const LatticeVec& v);

enum class SingularityClass { Klt, Plt, Lc, NotLc };
enum class Answer { Yes, No, Unknown };

std::string_view to_string(SingularityClass c);
std::string_view to_string(Answer a);

struct Witness {
  LatticeVec valuation;
  Rat discrepancy;
};

struct SingularityReport {
  SingularityClass cls;
  Answer dlt;
  std::vector<Witness> witnesses;
};

/// klt / plt / lc / not-lc together with the dlt answer. The dlt search
/// performs at most `dlt_depth` rounds of stellar subdivision.
SingularityReport classify(const ToricPair& pair, int dlt_depth = 6);

/// Log canonical threshold of an effective torus-invariant D. nullopt is the
/// +infinity returned for D = 0.
std::optional<Rat> lct(const ToricPair& pair, const TorusDivisor& d);

struct NefThreshold {
  Rat r;
  Int u;
  Int v;
};

/// r = max{t : H + t(K + Delta) nef} with the bound v <= a(dim X + 1)
/// checked on the result.
NefThreshold nef_threshold(const ToricPair& pair, const TorusDivisor& h, const Int& a);

/// a(n + 1) / eps.
Rat rationality_bound(const Int& a, const Int& n, const Rat& eps);

}  // namespace mmp
