#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace mmp {

using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
std::int64_t to_i64(const Int& v);

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}
  Rat(int v) : q_(v) {}
  Rat(long long v) : q_(static_cast<long>(v)) {}
  Rat(const Int& v) : q_(v) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Decimal points are rejected.
  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Int floor() const;
  Int ceil() const;
  /// x - floor(x), in [0, 1).
  Rat frac() const { return *this - Rat(floor()); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inverse() const;

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace mmp

template <>
struct std::hash<mmp::Rat> {
  std::size_t operator()(const mmp::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
