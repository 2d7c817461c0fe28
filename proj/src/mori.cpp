#include "mmp/mori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"

namespace mmp {

std::string_view to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::Divisorial: return "divisorial";
    case ContractionKind::Flipping: return "flipping";
    case ContractionKind::Fibration: return "fibration";
  }
  return "?";
}

std::vector<ExtremalRay> wall_classes(const ToricPair& pair) {
  const Fan& fan = pair.fan();
  const TorusDivisor k = pair.log_canonical();
  std::vector<ExtremalRay> out;
  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t wi = 0; wi < fan.walls().size(); ++wi) {
    const Wall& w = fan.walls()[wi];
    RatVec cls = wall_class(fan, w);
    auto [it, inserted] = index.try_emplace(primitive_integer(cls), out.size());
    if (inserted) {
      out.push_back({std::move(cls), wi, {wi}, intersection_number(fan, k, w), true});
      continue;
    }
    ExtremalRay& r = out[it->second];
    r.walls.push_back(wi);
    if (w.rays() < fan.walls()[r.wall].rays()) {
      r.wall = wi;
      r.curve_class = std::move(cls);
      r.k_degree = intersection_number(fan, k, w);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j].curve_class);
    out[i].extremal = others.empty() || !in_cone(others, out[i].curve_class);
  }
  return out;
}

std::vector<ExtremalRay> mori_cone_generators(const ToricPair& pair) {
  std::vector<ExtremalRay> all = wall_classes(pair);
  std::erase_if(all, [](const ExtremalRay& r) { return !r.extremal; });
  return all;
}

Rat degree(const Fan& fan, const ExtremalRay& ray, const TorusDivisor& d) {
  return intersection_number(fan, d, fan.walls().at(ray.wall));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Unions of maximal cones glued along the walls of the ray, in order of
// their least cone index; singletons included.
std::vector<std::pair<Cone, std::size_t>> glue(const Fan& fan, const ExtremalRay& ray) {
  UnionFind uf(fan.cones().size());
  for (auto wi : ray.walls) uf.unite(fan.walls()[wi].left_cone, fan.walls()[wi].right_cone);
  std::map<std::size_t, std::pair<std::set<std::size_t>, std::size_t>> groups;
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const std::size_t root = uf.find(c);
    auto [it, inserted] = groups.try_emplace(root);
    if (inserted) order.push_back(root);
    it->second.first.insert(fan.cones()[c].begin(), fan.cones()[c].end());
    ++it->second.second;
  }
  std::vector<std::pair<Cone, std::size_t>> out;
  for (auto root : order) {
    const auto& [rays, count] = groups[root];
    out.emplace_back(Cone(rays.begin(), rays.end()), count);
  }
  return out;
}

Fan fibration_base(const Fan& fan, const std::vector<std::size_t>& positive) {
  // Project along U = span of the positive rays onto Z^k via a basis of the
  // saturated lattice U^perp in M.
  std::vector<std::vector<Int>> rows;
  for (auto i : positive) {
    std::vector<Int> r;
    for (auto x : fan.ray(i).coords()) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  const auto basis = integer_kernel(rows, fan.rank());
  const std::size_t k = basis.size();
  if (k == 0) return Fan::make(0, {}, {Cone{}});

  std::vector<LatticeVec> base_rays;
  std::vector<std::optional<std::size_t>> image(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    std::vector<std::int64_t> p(k);
    for (std::size_t j = 0; j < k; ++j) {
      Int s = 0;
      for (std::size_t c = 0; c < fan.rank(); ++c) s += basis[j][c] * Int(static_cast<long>(fan.ray(i)[c]));
      p[j] = to_i64(s);
    }
    if (std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0; })) continue;
    const LatticeVec q = primitive(p);
    auto it = std::find(base_rays.begin(), base_rays.end(), q);
    image[i] = static_cast<std::size_t>(it - base_rays.begin());
    if (it == base_rays.end()) base_rays.push_back(q);
  }
  std::set<Cone> cones;
  for (const Cone& c : fan.cones()) {
    std::set<std::size_t> img;
    for (auto i : c)
      if (image[i]) img.insert(*image[i]);
    if (img.size() < k) continue;
    std::vector<LatticeVec> gens;
    for (auto j : img) gens.push_back(base_rays[j]);
    RatMatrix m;
    for (const auto& g : gens) m.push_back(g.to_rat());
    if (rank(m) == k) cones.insert(Cone(img.begin(), img.end()));
  }
  return Fan::make(k, base_rays, std::vector<Cone>(cones.begin(), cones.end()));
}

}  // namespace

ContractionStep contract(const ToricPair& pair, const ExtremalRay& ray) {
  const Fan& fan = pair.fan();
  if (ray.curve_class.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "ray does not match fan");
  const auto key = primitive_integer(ray.curve_class);
  std::optional<ExtremalRay> found;
  for (auto& r : wall_classes(pair))
    if (primitive_integer(r.curve_class) == key) found = std::move(r);
  if (!found || !found->extremal) throw Error(ErrorCode::NotExtremal, "class does not span an extremal ray");
  if (found->k_degree.sign() >= 0) throw Error(ErrorCode::NotNegative, "ray is not (K + Delta)-negative");

  ContractionStep step{ContractionKind::Fibration, *found, {}, {}, std::nullopt, std::nullopt};
  std::vector<std::size_t> neg, pos;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (found->curve_class[i].sign() < 0) neg.push_back(i);
    if (found->curve_class[i].sign() > 0) pos.push_back(i);
  }
  const auto groups = glue(fan, *found);
  for (const auto& [cone, count] : groups)
    if (count > 1) step.merged_cones.push_back(cone);

  if (neg.empty()) {
    try {
      step.base = fibration_base(fan, pos);
    } catch (const Error& e) {
      throw Error(ErrorCode::ContractionFailed, std::string("fibration base: ") + e.what());
    }
    return step;
  }
  if (neg.size() > 1) {
    step.kind = ContractionKind::Flipping;
    return step;
  }

  step.kind = ContractionKind::Divisorial;
  const std::size_t e = neg.front();
  step.removed_rays = {e};
  if (found->curve_class[e].sign() >= 0) throw Error(ErrorCode::ContractionFailed, "E . C is not negative");
  std::vector<LatticeVec> rays;
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    if (i != e) rays.push_back(fan.ray(i));
  std::vector<Cone> cones;
  for (const auto& [cone, count] : groups) {
    Cone c;
    for (auto i : cone)
      if (i != e) c.push_back(i > e ? i - 1 : i);
    if (std::find(cones.begin(), cones.end(), c) == cones.end()) cones.push_back(std::move(c));
  }
  try {
    step.target = Fan::make(fan.rank(), std::move(rays), std::move(cones));
  } catch (const Error& err) {
    throw Error(ErrorCode::ContractionFailed, std::string("divisorial target: ") + err.what());
  }
  return step;
}

FlipResult flip(const ToricPair& pair, const ContractionStep& step, std::size_t samples, std::uint64_t seed) {
  if (step.kind != ContractionKind::Flipping) throw Error(ErrorCode::NotFlipping, "not a flipping contraction");
  const Fan& fan = pair.fan();
  const RatVec& cls = step.ray.curve_class;
  auto fail = [](const std::string& what) { throw Error(ErrorCode::FlipVerificationFailed, what); };

  // A circuit G carries two triangulations: drop one positive ray, or drop
  // one negative ray. X uses the first; the flip uses the second.
  std::set<Cone> removed, added;
  for (const Cone& g : step.merged_cones)
    for (auto i : g) {
      Cone c;
      for (auto j : g)
        if (j != i) c.push_back(j);
      if (cls[i].sign() > 0) removed.insert(c);
      if (cls[i].sign() < 0) added.insert(c);
    }
  std::vector<Cone> cones;
  std::size_t hits = 0;
  for (const Cone& c : fan.cones()) {
    if (removed.count(c))
      ++hits;
    else
      cones.push_back(c);
  }
  if (hits != removed.size()) fail("circuit cones missing from the fan");
  cones.insert(cones.end(), added.begin(), added.end());
  Fan next;
  try {
    next = Fan::make(fan.rank(), fan.rays(), std::move(cones));
  } catch (const Error& e) {
    fail(std::string("flipped fan invalid: ") + e.what());
  }
  FlipResult out{ToricPair(next, pair.boundary()), {}, Rat(0), 0, 0};

  // 1+: small.
  if (next.rays() != fan.rays()) fail("flip changed the rays");

  // 2+ and 3+: the new wall curves are (K + Delta)-positive and span one ray,
  // opposite to the flipped class.
  const TorusDivisor k = out.pair.log_canonical();
  const std::vector<Int> opposite = [&] {
    RatVec neg;
    for (const auto& x : cls) neg.push_back(-x);
    return primitive_integer(neg);
  }();
  for (std::size_t wi = 0; wi < next.walls().size(); ++wi) {
    const Wall& w = next.walls()[wi];
    if (!added.count(next.cones()[w.left_cone]) || !added.count(next.cones()[w.right_cone])) continue;
    out.new_walls.push_back(wi);
    if (primitive_integer(wall_class(next, w)) != opposite) fail("new wall not in the opposite ray");
    const Rat kc = intersection_number(next, k, w);
    if (kc.sign() <= 0) fail("K + Delta not positive on a new wall");
    if (out.new_walls.size() == 1) out.new_k_degree = kc;
  }
  if (out.new_walls.empty()) fail("no new walls");

  // Discrepancies never drop, and rise strictly on valuations whose centre
  // on X is flipped away.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, 4);
  while (out.samples < samples) {
    const Cone& g = step.merged_cones[rng() % step.merged_cones.size()];
    std::vector<std::int64_t> v(fan.rank(), 0);
    for (auto i : g) {
      const int c = coeff(rng);
      for (std::size_t r = 0; r < fan.rank(); ++r) v[r] += c * fan.ray(i)[r];
    }
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) continue;
    const LatticeVec p = primitive(v);
    const Rat before = discrepancy(pair, p);
    const Rat after = discrepancy(out.pair, p);
    const auto hit = fan.locate(p.to_rat());
    Cone support;
    for (std::size_t j = 0; j < hit->second.size(); ++j)
      if (!hit->second[j].is_zero()) support.push_back(fan.cones()[hit->first][j]);
    const bool flipped_away = !next.is_face(support);
    if (after < before || (flipped_away && after == before)) fail("discrepancy monotonicity fails");
    if (after > before) ++out.strict;
    ++out.samples;
  }
  return out;
}

}  // namespace mmp
