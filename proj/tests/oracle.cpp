#include "oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace oracle {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

Float to_float(const Rat& x) { return Float(x.num().get_str()) / Float(x.den().get_str()); }

Float to_float(const mmp::QuadReal& x) {
  return to_float(x.a()) + to_float(x.b()) * boost::multiprecision::sqrt(Float(x.disc().get_str()));
}

Rat pairing(const Point& m, const mmp::LatticeVec& v) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * v[k];
  return Rat(static_cast<long long>(s));
}

std::int64_t pairing_i64(const Point& m, const mmp::LatticeVec& v) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * v[k];
  return s;
}

// Solves sum_i t_i cols[i] = target for independent columns using a
// nonsingular square subsystem of rows.
std::optional<RatVec> solve_columns(const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& target) {
  const std::size_t k = cols.size();
  const std::size_t n = target.size();
  if (k == 0) {
    for (const auto& x : target)
      if (!x.is_zero()) return std::nullopt;
    return RatVec{};
  }
  std::vector<std::size_t> rows(k);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) rows[r++] = i;
    // Rational determinant through a common denominator.
    auto build = [&](std::optional<std::size_t> replace) {
      Int scale = 1;
      for (const auto& c : cols)
        for (std::size_t i : rows) scale = mmp::lcm(scale, c[i].den());
      for (std::size_t i : rows) scale = mmp::lcm(scale, target[i].den());
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          const Rat x = (replace && *replace == b) ? target[rows[a]] : cols[b][rows[a]];
          m[a][b] = (x * Rat(scale)).num();
        }
      return det(m);
    };
    const Int d = build(std::nullopt);
    if (d != 0) {
      RatVec t(k);
      for (std::size_t b = 0; b < k; ++b) t[b] = Rat(build(b), d);
      for (std::size_t i = 0; i < n; ++i) {
        Rat s;
        for (std::size_t b = 0; b < k; ++b) s += t[b] * cols[b][i];
        if (s != target[i]) return std::nullopt;
      }
      return t;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

Int minor_gcd(const std::vector<mmp::LatticeVec>& vs, std::size_t n) {
  const std::size_t k = vs.size();
  if (k == 0) return 1;
  Int g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Int>> m;
    for (const auto& v : vs) {
      std::vector<Int> row;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) row.emplace_back(static_cast<long>(v[i]));
      m.push_back(row);
    }
    g = mmp::gcd(g, det(m));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return abs(g);
}

}  // namespace

Int det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RatVec cramer(const Fan& fan, std::size_t c, const std::vector<Rat>& v) {
  std::vector<std::vector<Rat>> cols;
  for (std::size_t i : fan.cones()[c]) cols.push_back(fan.ray(i).to_rat());
  return solve_columns(cols, v).value();
}

std::optional<std::pair<std::size_t, RatVec>> find_cone(const Fan& fan, const std::vector<Rat>& v) {
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    RatVec t = cramer(fan, c, v);
    if (std::all_of(t.begin(), t.end(), [](const Rat& x) { return x.sign() >= 0; })) return std::pair{c, t};
  }
  return std::nullopt;
}

std::vector<Point> points(const Fan& fan, const TorusDivisor& d) {
  const std::size_t n = fan.rank();
  const TorusDivisor fl = d.floor();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k)
    for (int s : {1, -1}) {
      std::vector<Rat> e(n);
      e[k] = Rat(s);
      const auto hit = find_cone(fan, e).value();
      Rat bound;
      const auto& cone = fan.cones()[hit.first];
      for (std::size_t i = 0; i < cone.size(); ++i) bound += hit.second[i] * fl[cone[i]];
      // s m_k >= -bound
      if (s == 1)
        lo[k] = mmp::to_i64((-bound).ceil());
      else
        hi[k] = mmp::to_i64(bound.floor());
    }
  std::vector<Point> out;
  for (std::size_t k = 0; k < n; ++k)
    if (lo[k] > hi[k]) return out;
  Point m = lo;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < fan.num_rays() && ok; ++i) ok = pairing(m, fan.ray(i)) >= -fl[i];
    if (ok) out.push_back(m);
    std::size_t k = 0;
    while (k < n && m[k] == hi[k]) m[k] = lo[k], ++k;
    if (k == n) break;
    ++m[k];
  }
  return out;
}

std::optional<TorusDivisor> fix(const Fan& fan, const TorusDivisor& d) {
  const auto pts = points(fan, d);
  if (pts.empty()) return std::nullopt;
  const TorusDivisor fl = d.floor();
  TorusDivisor f = TorusDivisor::zero(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    Rat best = pairing(pts[0], fan.ray(i));
    for (const auto& m : pts) best = mmp::min(best, pairing(m, fan.ray(i)));
    f[i] = best + fl[i];
  }
  return f;
}

Rat intersection(const Fan& fan, const TorusDivisor& d, const mmp::Wall& w) {
  const std::size_t n = fan.rank();
  std::vector<mmp::LatticeVec> tau;
  for (std::size_t i : w.shared) tau.push_back(fan.ray(i));
  const Int mult_tau = minor_gcd(tau, n);
  auto mult_with = [&](std::size_t extra) {
    std::vector<std::vector<Int>> m;
    for (const auto& v : tau) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k) row.emplace_back(static_cast<long>(v[k]));
      m.push_back(row);
    }
    std::vector<Int> row;
    for (std::size_t k = 0; k < n; ++k) row.emplace_back(static_cast<long>(fan.ray(extra)[k]));
    m.push_back(row);
    return Int(abs(det(m)));
  };
  const Rat cu(mult_tau, mult_with(w.left_ray));
  const Rat cw(mult_tau, mult_with(w.right_ray));
  std::vector<Rat> rhs(n);
  for (std::size_t k = 0; k < n; ++k)
    rhs[k] = -(cu * Rat(static_cast<long long>(fan.ray(w.left_ray)[k])) +
               cw * Rat(static_cast<long long>(fan.ray(w.right_ray)[k])));
  std::vector<std::vector<Rat>> cols;
  for (const auto& v : tau) cols.push_back(v.to_rat());
  const RatVec c = solve_columns(cols, rhs).value();
  Rat s = cu * d[w.left_ray] + cw * d[w.right_ray];
  for (std::size_t i = 0; i < w.shared.size(); ++i) s += c[i] * d[w.shared[i]];
  return s;
}

Rat nef_threshold(const mmp::ToricPair& pair, const TorusDivisor& h) {
  const TorusDivisor k = pair.log_canonical();
  std::optional<Rat> best;
  for (const auto& w : pair.fan().walls()) {
    const Rat kc = intersection(pair.fan(), k, w);
    if (kc.sign() >= 0) continue;
    const Rat t = intersection(pair.fan(), h, w) / -kc;
    best = best ? mmp::min(*best, t) : t;
  }
  return best.value();
}

std::optional<Rat> log_discrepancy(const mmp::ToricPair& pair, const std::vector<std::int64_t>& v) {
  std::vector<Rat> x;
  for (auto c : v) x.emplace_back(static_cast<long long>(c));
  const auto hit = find_cone(pair.fan(), x);
  if (!hit) return std::nullopt;
  const auto& cone = pair.fan().cones()[hit->first];
  Rat s;
  for (std::size_t i = 0; i < cone.size(); ++i) s += hit->second[i] * (Rat(1) - pair.boundary()[cone[i]]);
  return s;
}

std::size_t restriction_rank(const Fan& fan, const TorusDivisor& d, std::size_t s) {
  const Rat target = -d.floor()[s];
  std::size_t count = 0;
  for (const auto& m : points(fan, d))
    if (pairing(m, fan.ray(s)) == target) ++count;
  return count;
}

std::optional<std::size_t> stabilization(const Fan& fan, const TorusDivisor& l, std::size_t horizon) {
  std::vector<std::vector<Point>> deg(horizon + 1);
  for (std::size_t m = 1; m <= horizon; ++m) deg[m] = points(fan, Rat(static_cast<long>(m)) * l);
  auto mobile = [&](const std::vector<Point>& pts) {
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
      std::int64_t best = pairing_i64(pts[0], fan.ray(j));
      for (const auto& m : pts) best = std::min(best, pairing_i64(m, fan.ray(j)));
      out.push_back(-best);
    }
    return out;
  };
  for (std::size_t i = 1; 2 * i <= horizon; ++i) {
    bool ok = true;
    std::set<Point> sums(deg[i].begin(), deg[i].end());
    for (std::size_t k = 2; i * k <= horizon && ok; ++k) {
      std::set<Point> next;
      for (const auto& a : sums)
        for (const auto& b : deg[i]) {
          Point c(a.size());
          for (std::size_t t = 0; t < a.size(); ++t) c[t] = a[t] + b[t];
          next.insert(c);
        }
      sums = std::move(next);
      const auto& full = deg[i * k];
      if (sums.empty() || full.empty())
        ok = sums.empty() && full.empty();
      else
        ok = mobile(std::vector<Point>(sums.begin(), sums.end())) == mobile(full);
    }
    if (ok) return i;
  }
  return std::nullopt;
}

bool frac_exceeds(const Int& j, const mmp::QuadReal& d, const Rat& b) {
  const Float x = Float(j.get_str()) * to_float(d);
  return x - boost::multiprecision::floor(x) > to_float(b);
}

std::string decimal(const mmp::QuadReal& x) {
  std::ostringstream os;
  os << std::setprecision(100) << to_float(x);
  return os.str();
}

int sign100(const mmp::QuadReal& x) {
  const Float f = to_float(x);
  const Float tiny("1e-90");
  if (f > tiny) return 1;
  if (f < -tiny) return -1;
  return 0;
}

bool abs_below100(const mmp::QuadReal& x, const Rat& eps) {
  return boost::multiprecision::abs(to_float(x)) < to_float(eps) - Float("1e-90");
}

}  // namespace oracle
