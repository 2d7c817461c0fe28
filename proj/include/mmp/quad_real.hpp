#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "mmp/rational.hpp"

namespace mmp {

/// a + b*sqrt(disc) with disc a square-free positive integer. Every
/// decision (sign, comparison, floor) is made by exact integer tests.
class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(const Rat& a) : a_(a) {}
  QuadReal(const Rat& a, const Rat& b, const Int& disc);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& disc() const { return disc_; }

  bool is_rational() const { return b_.is_zero(); }
  int sign() const;
  Int floor() const;
  Int ceil() const;
  QuadReal frac() const { return *this - QuadReal(Rat(floor())); }
  QuadReal conjugate() const { return QuadReal(a_, -b_, disc_); }
  /// a^2 - b^2 disc
  Rat norm() const { return a_ * a_ - b_ * b_ * Rat(disc_); }
  QuadReal inverse() const;

  /// Rough decimal value; display only.
  double approx() const;
  std::string str() const;

  QuadReal operator-() const { return QuadReal(-a_, -b_, disc_); }
  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator/(const QuadReal& x, const QuadReal& y) { return x * y.inverse(); }

  friend bool operator==(const QuadReal& x, const QuadReal& y) { return (x - y).sign() == 0; }
  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadReal& q) { return os << q.str(); }

 private:
  Rat a_;
  Rat b_;
  Int disc_{1};
};

bool is_square_free(const Int& n);

/// An exact real: rational, or in a real quadratic field.
using RealNumber = std::variant<Rat, QuadReal>;

inline QuadReal as_quad(const RealNumber& x) {
  if (const Rat* r = std::get_if<Rat>(&x)) return QuadReal(*r);
  return std::get<QuadReal>(x);
}
inline bool is_irrational(const RealNumber& x) {
  return std::holds_alternative<QuadReal>(x) && !std::get<QuadReal>(x).is_rational();
}

/// Denominators of the continued-fraction convergents of x, at most `count`
/// of them, in increasing order (starting at 1). Stops early when x is
/// rational and its expansion terminates.
std::vector<Int> convergent_denominators(const QuadReal& x, std::size_t count);

}  // namespace mmp
