#include "mmp/quad_real.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mmp/error.hpp"

namespace mmp {

bool is_square_free(const Int& n) {
  if (n <= 0) return false;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

QuadReal::QuadReal(const Rat& a, const Rat& b, const Int& disc) : a_(a), b_(b), disc_(disc) {
  if (!is_square_free(disc_)) throw Error(ErrorCode::NotSquareFree, "discriminant " + disc_.get_str());
  if (disc_ == 1) {
    a_ += b_;
    b_ = Rat(0);
  }
  if (b_.is_zero()) disc_ = 1;
}

namespace {

Int common_disc(const QuadReal& x, const QuadReal& y) {
  if (x.is_rational()) return y.disc();
  if (y.is_rational()) return x.disc();
  if (x.disc() != y.disc())
    throw Error(ErrorCode::DifferentFields,
                "sqrt(" + x.disc().get_str() + ") and sqrt(" + y.disc().get_str() + ")");
  return x.disc();
}

}  // namespace

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  return QuadReal(x.a_ + y.a_, x.b_ + y.b_, common_disc(x, y));
}

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  const Int d = common_disc(x, y);
  return QuadReal(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

int QuadReal::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 disc.
  const auto c = a_ * a_ <=> b_ * b_ * Rat(disc_);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

Int QuadReal::floor() const {
  if (is_rational()) return a_.floor();
  // b sqrt(D) = sign(b) sqrt(b^2 D); start from an integer-sqrt estimate and
  // correct with exact sign tests.
  const Rat s = b_ * b_ * Rat(disc_);
  Int root;
  const Int fl = s.floor();
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  Int k = a_.floor() + (b_.sign() > 0 ? root : Int(-root));
  while ((*this - QuadReal(Rat(k))).sign() < 0) --k;
  while ((*this - QuadReal(Rat(Int(k + 1)))).sign() >= 0) ++k;
  return k;
}

Int QuadReal::ceil() const {
  const Int f = floor();
  return (*this - QuadReal(Rat(f))).sign() == 0 ? f : Int(f + 1);
}

QuadReal QuadReal::inverse() const {
  const Rat n = norm();
  if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return QuadReal(a_ / n, -b_ / n, disc_);
}

double QuadReal::approx() const {
  return a_.to_double() + b_.to_double() * std::sqrt(disc_.get_d());
}

std::string QuadReal::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << a_;
  } else {
    os << a_ << (b_.sign() < 0 ? " - " : " + ") << b_.abs() << "*sqrt(" << disc_ << ")";
  }
  return os.str();
}

std::vector<Int> convergent_denominators(const QuadReal& x, std::size_t count) {
  std::vector<Int> out;
  Int k_prev2 = 1;
  Int k_prev1 = 0;
  QuadReal rest = x;
  while (out.size() < count) {
    const Int term = rest.floor();
    const Int k = term * k_prev1 + k_prev2;
    if (out.empty() || k != out.back()) out.push_back(k);
    k_prev2 = k_prev1;
    k_prev1 = k;
    const QuadReal f = rest - QuadReal(Rat(term));
    if (f.sign() == 0) break;
    rest = f.inverse();
  }
  return out;
}

}  // namespace mmp
