#pragma once

#include <variant>
#include <vector>

#include "mmp/quad_real.hpp"

namespace mmp {

/// D = sum d_k P_k with the P_k written in a basis G_i through the
/// nonnegative integer matrix E (g rows, l columns).
struct ApproxInstance {
  std::vector<std::vector<Int>> e;
  std::vector<RealNumber> d;
  Rat eps;

  /// Checks: E nonnegative with nonzero columns, d >= 0, eps > 0, some d_k
  /// irrational, and a single quadratic field.
  static ApproxInstance make(std::vector<std::vector<Int>> e, std::vector<RealNumber> d, Rat eps);
  std::size_t l() const { return d.size(); }
  std::size_t g() const { return e.size(); }
  const Int& disc() const { return disc_; }

 private:
  Int disc_{1};
};

struct ApproxCertificate {
  Int j;
  std::vector<Int> m;
  std::vector<QuadReal> residual;  // E (j d - m) in the G basis
  std::size_t negative_index = 0;  // a coordinate of the residual below zero
  bool from_convergent = false;
};

struct NotFoundUpTo {
  Int cap;
};

/// Searches j <= cap: convergent denominators of the irrational coordinates
/// first, then 1, 2, ...; for each j the rounded vector m and its +-1
/// neighbours.
std::variant<ApproxCertificate, NotFoundUpTo> approximate(const ApproxInstance& inst, const Int& cap);

/// Both conditions, exactly: |residual|_inf < eps and some coordinate < 0.
bool verify(const ApproxInstance& inst, const ApproxCertificate& cert);

}  // namespace mmp
