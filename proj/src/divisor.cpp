#include "mmp/divisor.hpp"

#include <algorithm>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"

namespace mmp {

TorusDivisor TorusDivisor::prime(std::size_t n, std::size_t i) {
  RatVec c(n);
  c[i] = Rat(1);
  return TorusDivisor(std::move(c));
}

bool TorusDivisor::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& x) { return x.is_integer(); });
}

bool TorusDivisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& x) { return x.sign() >= 0; });
}

bool TorusDivisor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& x) { return x.is_zero(); });
}

TorusDivisor TorusDivisor::floor() const {
  RatVec c;
  for (const auto& x : coeffs_) c.emplace_back(x.floor());
  return TorusDivisor(std::move(c));
}

TorusDivisor TorusDivisor::ceil() const {
  RatVec c;
  for (const auto& x : coeffs_) c.emplace_back(x.ceil());
  return TorusDivisor(std::move(c));
}

Int TorusDivisor::denominator() const {
  Int l = 1;
  for (const auto& x : coeffs_) l = lcm(l, x.den());
  return l;
}

TorusDivisor TorusDivisor::without(std::size_t skip) const {
  RatVec c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (i != skip) c.push_back(coeffs_[i]);
  return TorusDivisor(std::move(c));
}

TorusDivisor TorusDivisor::operator-() const {
  RatVec c;
  for (const auto& x : coeffs_) c.push_back(-x);
  return TorusDivisor(std::move(c));
}

TorusDivisor& TorusDivisor::operator+=(const TorusDivisor& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "divisor length");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TorusDivisor& TorusDivisor::operator-=(const TorusDivisor& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "divisor length");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TorusDivisor operator*(const Rat& k, const TorusDivisor& d) {
  RatVec c;
  for (const auto& x : d.coeffs_) c.push_back(k * x);
  return TorusDivisor(std::move(c));
}

bool TorusDivisor::operator<=(const TorusDivisor& o) const {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "divisor length");
  for (std::size_t i = 0; i < size(); ++i)
    if (coeffs_[i] > o.coeffs_[i]) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const TorusDivisor& d) {
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  return os << ']';
}

namespace {

void check_size(const Fan& fan, const TorusDivisor& d) {
  if (d.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "divisor does not match fan");
}

std::vector<HalfSpace> polytope_constraints(const Fan& fan, const TorusDivisor& d) {
  std::vector<HalfSpace> rows;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) rows.push_back(HalfSpace::at_least(fan.ray(i), -d[i]));
  return rows;
}

}  // namespace

RatVec cartier_data(const Fan& fan, const TorusDivisor& d, std::size_t cone) {
  check_size(fan, d);
  RatVec values;
  for (auto i : fan.cones()[cone]) values.push_back(-d[i]);
  return fan.cone_functional(cone, values);
}

bool is_cartier(const Fan& fan, const TorusDivisor& d) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const RatVec m = cartier_data(fan, d, c);
    if (!std::all_of(m.begin(), m.end(), [](const Rat& x) { return x.is_integer(); })) return false;
  }
  return true;
}

Rat intersection_number(const Fan& fan, const TorusDivisor& d, const Wall& w) {
  // Twisting D by the character m_left kills it on the left cone; what is
  // left on the right ray is <m_left - m_right, u'>, and D_{u'}.C equals
  // mult(wall) / mult(right cone).
  const RatVec ml = cartier_data(fan, d, w.left_cone);
  const RatVec mr = cartier_data(fan, d, w.right_cone);
  RatVec diff(ml.size());
  for (std::size_t k = 0; k < ml.size(); ++k) diff[k] = ml[k] - mr[k];
  return dot(diff, fan.ray(w.right_ray)) * Rat(w.multiplicity, fan.cone_multiplicity(w.right_cone));
}

RatVec wall_class(const Fan& fan, const Wall& w) {
  RatVec out(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    if (w.circuit[i] != 0) out[i] = intersection_number(fan, TorusDivisor::prime(fan.num_rays(), i), w);
  return out;
}

bool is_nef(const Fan& fan, const TorusDivisor& d) {
  return std::all_of(fan.walls().begin(), fan.walls().end(),
                     [&](const Wall& w) { return intersection_number(fan, d, w).sign() >= 0; });
}

bool support_strictly_convex(const Fan& fan, const TorusDivisor& d) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const RatVec m = cartier_data(fan, d, c);
    const Cone& cone = fan.cones()[c];
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
      if (std::binary_search(cone.begin(), cone.end(), i)) continue;
      if (dot(m, fan.ray(i)) <= -d[i]) return false;
    }
  }
  return true;
}

bool is_ample(const Fan& fan, const TorusDivisor& d) {
  if (!fan.is_complete()) return false;
  const bool walls_positive = std::all_of(fan.walls().begin(), fan.walls().end(), [&](const Wall& w) {
    return intersection_number(fan, d, w).sign() > 0;
  });
  return walls_positive && support_strictly_convex(fan, d);
}

bool is_globally_generated(const Fan& fan, const TorusDivisor& d) {
  if (!d.is_integral()) throw Error(ErrorCode::NonIntegralDivisor, "global generation needs an integral divisor");
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const RatVec m = cartier_data(fan, d, c);
    if (!std::all_of(m.begin(), m.end(), [](const Rat& x) { return x.is_integer(); })) return false;
    for (std::size_t i = 0; i < fan.num_rays(); ++i)
      if (dot(m, fan.ray(i)) < -d[i]) return false;
  }
  return true;
}

DivisorPolytope::DivisorPolytope(const Fan& fan, const TorusDivisor& d) : fan_(&fan), d_(d) { check_size(fan, d); }

int DivisorPolytope::dimension() const {
  const auto rows = polytope_constraints(*fan_, d_);
  const std::size_t n = fan_->rank();
  if (!lp_feasible(rows, n)) return -1;
  // Implicit equalities are the inequalities whose maximum slack is zero.
  RatMatrix equalities;
  for (std::size_t i = 0; i < fan_->num_rays(); ++i) {
    const RatVec obj = fan_->ray(i).to_rat();
    const LpResult r = lp_maximize(rows, obj, d_[i]);
    if (const auto* opt = std::get_if<LpOptimum>(&r); opt && opt->value.is_zero()) equalities.push_back(obj);
  }
  return static_cast<int>(n - rank(equalities));
}

const std::vector<std::vector<std::int64_t>>& DivisorPolytope::lattice_points() const {
  if (points_) return *points_;
  points_.emplace();
  const std::size_t n = fan_->rank();
  const TorusDivisor fl = d_.floor();
  const auto rows = polytope_constraints(*fan_, fl);
  if (n == 0) {
    points_->push_back({});
    return *points_;
  }
  if (!lp_feasible(rows, n)) return *points_;
  std::vector<std::int64_t> lo(n), hi(n);
  Int candidates = 1;
  for (std::size_t k = 0; k < n; ++k) {
    RatVec e(n);
    e[k] = Rat(1);
    const LpResult mn = lp_minimize(rows, e);
    const LpResult mx = lp_maximize(rows, e);
    if (std::holds_alternative<Unbounded>(mn) || std::holds_alternative<Unbounded>(mx))
      throw Error(ErrorCode::InvalidInput, "divisor polytope is unbounded (fan not complete)");
    lo[k] = to_i64(std::get<LpOptimum>(mn).value.ceil());
    hi[k] = to_i64(std::get<LpOptimum>(mx).value.floor());
    if (hi[k] < lo[k]) return *points_;
    candidates *= Int(static_cast<long>(hi[k] - lo[k] + 1));
  }
  if (candidates > Int(static_cast<long>(kMaxCandidates)))
    throw Error(ErrorCode::InvalidInput, "polytope bounding box exceeds candidate cap");
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> offsets;
  for (std::size_t i = 0; i < fan_->num_rays(); ++i) {
    normals.push_back(fan_->ray(i).coords());
    offsets.push_back(-to_i64(fl[i].num()));
  }
  std::vector<std::int64_t> m = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < normals.size() && inside; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += normals[i][k] * m[k];
      inside = s >= offsets[i];
    }
    if (inside) points_->push_back(m);
    std::size_t k = 0;
    while (k < n && m[k] == hi[k]) {
      m[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++m[k];
  }
  return *points_;
}

std::size_t h0(const Fan& fan, const TorusDivisor& d) {
  if (!d.is_integral()) throw Error(ErrorCode::NonIntegralDivisor, "h0 needs an integral divisor");
  if (!fan.is_complete()) throw Error(ErrorCode::InvalidInput, "h0 needs a complete fan");
  return DivisorPolytope(fan, d).count();
}

bool is_big(const Fan& fan, const TorusDivisor& d) {
  return DivisorPolytope(fan, d).dimension() == static_cast<int>(fan.rank());
}

MobFix mob_fix(const Fan& fan, const TorusDivisor& d) {
  if (!d.is_integral()) throw Error(ErrorCode::NonIntegralDivisor, "mob_fix needs an integral divisor");
  const auto rows = polytope_constraints(fan, d);
  RatVec fix(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    const auto best = ilp_minimize(rows, fan.ray(i).to_rat());
    if (!best) throw Error(ErrorCode::EmptyLinearSystem, "h0(D) = 0");
    fix[i] = *best + d[i];
  }
  TorusDivisor f(std::move(fix));
  return {d - f, f};
}

}  // namespace mmp
