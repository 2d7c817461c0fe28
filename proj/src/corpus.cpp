#include "mmp/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"

namespace mmp::corpus {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Fan projective_space(std::size_t n) {
  std::vector<LatticeVec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    rays.emplace_back(e);
  }
  rays.emplace_back(std::vector<std::int64_t>(n, -1));
  std::vector<Cone> cones;
  for (std::size_t skip = n + 1; skip-- > 0;) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan::make(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(std::int64_t a) {
  return Fan::make(2, {LatticeVec{1, 0}, LatticeVec{0, 1}, LatticeVec{-1, a}, LatticeVec{0, -1}},
                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan product(const Fan& x, const Fan& y) {
  const std::size_t n = x.rank() + y.rank();
  std::vector<LatticeVec> rays;
  for (const auto& r : x.rays()) {
    std::vector<std::int64_t> v(r.coords());
    v.resize(n, 0);
    rays.emplace_back(v);
  }
  for (const auto& r : y.rays()) {
    std::vector<std::int64_t> v(x.rank(), 0);
    v.insert(v.end(), r.coords().begin(), r.coords().end());
    rays.emplace_back(v);
  }
  std::vector<Cone> cones;
  for (const auto& c : x.cones())
    for (const auto& d : y.cones()) {
      Cone e = c;
      for (auto i : d) e.push_back(i + x.num_rays());
      cones.push_back(e);
    }
  return Fan::make(n, std::move(rays), std::move(cones));
}

Fan blow_up(const Fan& fan, const Cone& face) {
  std::vector<std::int64_t> sum(fan.rank(), 0);
  for (auto i : face)
    for (std::size_t k = 0; k < fan.rank(); ++k) sum[k] += fan.ray(i)[k];
  std::vector<LatticeVec> rays = fan.rays();
  const std::size_t idx = rays.size();
  rays.push_back(primitive(sum));
  std::vector<Cone> cones;
  for (const Cone& c : fan.cones()) {
    if (!std::includes(c.begin(), c.end(), face.begin(), face.end())) {
      cones.push_back(c);
      continue;
    }
    for (auto j : face) {
      Cone d;
      for (auto i : c)
        if (i != j) d.push_back(i);
      d.push_back(idx);
      std::sort(d.begin(), d.end());
      cones.push_back(d);
    }
  }
  return Fan::make(fan.rank(), std::move(rays), std::move(cones));
}

std::vector<NamedFan> smooth_surfaces(std::size_t count, Rng& rng, std::size_t max_blowups) {
  std::vector<NamedFan> out;
  while (out.size() < count) {
    NamedFan f;
    switch (uniform(rng, 0, 2)) {
      case 0:
        f = {"P2", projective_space(2)};
        break;
      case 1:
        f = {"P1xP1", product(projective_space(1), projective_space(1))};
        break;
      default: {
        const long a = uniform(rng, 1, 3);
        f = {"F" + std::to_string(a), hirzebruch(a)};
      }
    }
    const long k = uniform(rng, 0, static_cast<long>(max_blowups));
    for (long b = 0; b < k; ++b) {
      const Cone& c = f.fan.cones()[uniform(rng, 0, static_cast<long>(f.fan.cones().size()) - 1)];
      f.fan = blow_up(f.fan, c);
    }
    if (k > 0) f.name += "+" + std::to_string(k);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<NamedFan> smooth_threefolds(std::size_t count, Rng& rng, std::size_t max_blowups) {
  std::vector<NamedFan> out;
  const Fan p1 = projective_space(1);
  while (out.size() < count) {
    NamedFan f;
    switch (uniform(rng, 0, 2)) {
      case 0:
        f = {"P3", projective_space(3)};
        break;
      case 1:
        f = {"P1xP1xP1", product(product(p1, p1), p1)};
        break;
      default:
        f = {"P2xP1", product(projective_space(2), p1)};
    }
    const long k = uniform(rng, 0, static_cast<long>(max_blowups));
    for (long b = 0; b < k; ++b) {
      Cone c = f.fan.cones()[uniform(rng, 0, static_cast<long>(f.fan.cones().size()) - 1)];
      if (uniform(rng, 0, 1) == 1) c.erase(c.begin() + uniform(rng, 0, 2));  // an invariant curve
      f.fan = blow_up(f.fan, c);
    }
    if (k > 0) f.name += "+" + std::to_string(k);
    out.push_back(std::move(f));
  }
  return out;
}

TorusDivisor ample_divisor(const Fan& fan, Rng& rng) {
  const std::size_t n = fan.num_rays();
  std::vector<HalfSpace> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = Rat(1);
    rows.push_back({e, Rat(0), false});
  }
  for (const Wall& w : fan.walls()) rows.push_back({wall_class(fan, w), Rat(1), false});
  RatVec weights;
  for (std::size_t i = 0; i < n; ++i) weights.emplace_back(uniform(rng, 1, 5));
  const LpResult r = lp_minimize(rows, weights);
  TorusDivisor d(std::get<LpOptimum>(r).point);
  d = Rat(d.denominator()) * d;
  if (!is_ample(fan, d)) throw Error(ErrorCode::InvalidFan, "fan is not projective");
  return d;
}

TorusDivisor klt_boundary(const Fan& fan, Rng& rng, long max_den) {
  RatVec c;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (uniform(rng, 0, 1) == 0) {
      c.emplace_back(0);
      continue;
    }
    const long den = uniform(rng, 2, max_den);
    c.emplace_back(uniform(rng, 1, den - 1), den);
  }
  return TorusDivisor(std::move(c));
}

AdjointSequenceA1 rational_a1(Rng& rng) {
  const long s = uniform(rng, 1, 8);
  const Rat b(uniform(rng, 0, s - 1), s);
  const long q = (Rat(1) / (Rat(1) - b)).floor().get_si();
  const long v = uniform(rng, 1, q);
  long u = uniform(rng, 0, 3 * v);
  while (std::gcd(u, v) != 1) ++u;
  const Rat d(u, v);
  const long n = uniform(rng, v, std::max(v, 30L));
  std::vector<Rat> table;
  for (long j = 1; j <= n; ++j) table.emplace_back(Rat((Rat(j) * d).floor()) / Rat(j));
  return AdjointSequenceA1::make(b, std::move(table), d);
}

AdjointSequenceA1 quadratic_a1(Rng& rng) {
  static constexpr long kDiscs[] = {2, 3, 5, 6, 7};
  while (true) {
    const long disc = kDiscs[uniform(rng, 0, 4)];
    const QuadReal d(Rat(uniform(rng, 0, 2)), Rat(uniform(rng, 1, 3), uniform(rng, 1, 2)), Int(disc));
    const long s = uniform(rng, 2, 12);
    const Rat b(uniform(rng, 1, s - 1), s);
    long first = 0;
    for (long j = 1; j <= 1000 && first == 0; ++j)
      if ((QuadReal(Rat(j)) * d).frac() > QuadReal(b)) first = j;
    if (first < 2) continue;
    const long n = std::min(first - 1, 30L);
    std::vector<Rat> table;
    for (long j = 1; j <= n; ++j) table.emplace_back(Rat((QuadReal(Rat(j)) * d).floor()) / Rat(j));
    return AdjointSequenceA1::make(b, std::move(table), d);
  }
}

ApproxInstance approx_instance(Rng& rng, long disc, const Rat& eps) {
  const long l = uniform(rng, 1, 3);
  const long g = uniform(rng, l, l + 1);
  std::vector<std::vector<Int>> e(g, std::vector<Int>(l, Int(0)));
  for (long k = 0; k < l; ++k) {
    for (long i = 0; i < g; ++i) e[i][k] = uniform(rng, 0, 1);
    e[k][k] = 1;
  }
  std::vector<RealNumber> d;
  for (long k = 0; k < l; ++k) {
    if (k > 0 && uniform(rng, 0, 2) == 0) {
      d.emplace_back(Rat(uniform(rng, 0, 4)));
      continue;
    }
    const long b = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
    const long a = b < 0 ? uniform(rng, 3 * -b, 3 * -b + 2) : uniform(rng, 0, 2);
    d.emplace_back(QuadReal(Rat(a), Rat(b), Int(disc)));
  }
  return ApproxInstance::make(std::move(e), std::move(d), eps);
}

PlantedStrip planted_strip(Rng& rng) {
  static const Rat kEps[] = {Rat(1), Rat(1, 2), Rat(1, 3), Rat(2), Rat(3, 2)};
  constexpr std::int64_t kBox = 40;
  while (true) {
    PlantedStrip s;
    s.a = Int(uniform(rng, 1, 2));
    s.n = static_cast<int>(uniform(rng, 2, 4));
    s.eps = kEps[uniform(rng, 0, 4)];
    s.bound = kBox;
    const long v = uniform(rng, 1, 6);
    long u = uniform(rng, 1, 3 * v);
    while (std::gcd(u, v) != 1) ++u;
    s.r = Rat(u, v);
    const long a = s.a.get_si();
    // a v y - u x = c, one line per c with a lattice point in the box.
    std::vector<long> lines;
    for (long c = 0; Rat(c) < s.eps * Rat(v); ++c) {
      bool hit = false;
      for (std::int64_t x = 0; x <= kBox && !hit; ++x) {
        const std::int64_t num = c + u * x;
        hit = num % (a * v) == 0 && num / (a * v) <= kBox;
      }
      if (hit) lines.push_back(c);
    }
    if (lines.empty() || static_cast<int>(lines.size()) > s.n) continue;
    s.p = Poly2::constant(Rat(uniform(rng, 1, 3)));
    int deg = 0;
    for (long c : lines) {
      const LinearFactor f = LinearFactor::normalized(Int(u), Int(-a * v), Int(c));
      s.planted.push_back(f);
      s.p = s.p * f.poly();
      ++deg;
    }
    while (deg < s.n && uniform(rng, 0, 1) == 1) {
      s.p = s.p * Poly2::linear(Rat(uniform(rng, 1, 3)), Rat(uniform(rng, 1, 3)), Rat(uniform(rng, 1, 5)));
      ++deg;
    }
    return s;
  }
}

}  // namespace mmp::corpus
