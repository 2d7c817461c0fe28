#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mmp/quad_real.hpp"

namespace mmp {

/// Bivariate polynomial over Q, keyed by (deg_x, deg_y).
class Poly2 {
 public:
  using Monomial = std::pair<int, int>;

  Poly2() = default;
  static Poly2 constant(const Rat& c);
  static Poly2 monomial(const Rat& c, int i, int j);
  /// ax * x + by * y + c.
  static Poly2 linear(const Rat& ax, const Rat& by, const Rat& c);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rat eval(const Rat& x, const Rat& y) const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Exact quotient by ax * x + by * y + c, or nullopt when it does not divide.
  std::optional<Poly2> divide_linear(const Rat& ax, const Rat& by, const Rat& c) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

/// x * X + y * Y + c with gcd 1 and leading coefficient positive.
struct LinearFactor {
  Int x, y, c;
  int multiplicity = 1;

  static LinearFactor normalized(Int x, Int y, Int c);
  Poly2 poly() const;
  std::string str() const;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

using Slope = RealNumber;

enum class StripOutcome { EmptyStrip, NotVanishing, Factored, InsufficientEvidence };
std::string_view to_string(StripOutcome o);

struct StripVerdict {
  StripOutcome outcome = StripOutcome::EmptyStrip;
  std::size_t points = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;  // a non-zero of P
  std::vector<LinearFactor> factors;
  Rat bound;                      // a(n + 1) / eps
  std::optional<bool> bound_ok;   // v <= bound, rational slopes only
};

/// Looks at the lattice points 0 <= x, y <= N of the strip 0 <= ay - rx < eps.
/// When P vanishes on all of them, tries to explain this by linear factors:
/// the lines ay - rx = const for rational r, lines through the origin
/// otherwise.
StripVerdict strip_vanishing_verify(const Poly2& p, int n, const Int& a, const Slope& r, const Rat& eps,
                                    std::int64_t bound_n);

}  // namespace mmp
