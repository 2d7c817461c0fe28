#include "mmp/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"

namespace mmp {

Cone Wall::rays() const {
  Cone out = shared;
  out.push_back(left_ray);
  out.push_back(right_ray);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RatMatrix generator_matrix(const std::vector<LatticeVec>& rays, const Cone& cone) {
  RatMatrix m;
  for (auto i : cone) m.push_back(rays[i].to_rat());
  return m;
}

RatMatrix invert(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix inv(n, RatVec(n));
  for (std::size_t c = 0; c < n; ++c) {
    RatVec e(n);
    e[c] = Rat(1);
    auto col = solve_square(m, e);
    if (!col) throw Error(ErrorCode::InvalidFan, "cone generators are linearly dependent");
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = (*col)[r];
  }
  return inv;
}

// Two simplicial cones meet in a common face iff some functional is
// positive on the rest of one, negative on the rest of the other and zero
// on the shared rays.
bool meet_properly(const std::vector<LatticeVec>& rays, std::size_t rank, const Cone& a, const Cone& b) {
  std::vector<HalfSpace> rows;
  for (auto i : a) {
    const bool common = std::binary_search(b.begin(), b.end(), i);
    rows.push_back(HalfSpace{rays[i].to_rat(), common ? Rat(0) : Rat(1), common});
  }
  for (auto i : b) {
    if (std::binary_search(a.begin(), a.end(), i)) continue;
    RatVec neg = rays[i].to_rat();
    for (auto& x : neg) x = -x;
    rows.push_back(HalfSpace{neg, Rat(1), false});
  }
  return lp_feasible(rows, rank);
}

}  // namespace

Fan Fan::make(std::size_t rank, std::vector<LatticeVec> rays, std::vector<Cone> cones) {
  Fan f;
  f.rank_ = rank;
  for (const auto& r : rays) {
    if (r.size() != rank) throw Error(ErrorCode::InvalidFan, "ray of wrong length");
    if (r.is_zero() || !r.is_primitive()) throw Error(ErrorCode::InvalidFan, "ray is not primitive");
  }
  {
    std::set<LatticeVec> seen(rays.begin(), rays.end());
    if (seen.size() != rays.size()) throw Error(ErrorCode::InvalidFan, "repeated ray");
  }
  for (auto& c : cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw Error(ErrorCode::InvalidFan, "repeated ray in cone");
    if (c.size() != rank) throw Error(ErrorCode::InvalidFan, "cone is not full-dimensional simplicial");
    for (auto i : c)
      if (i >= rays.size()) throw Error(ErrorCode::InvalidFan, "cone refers to unknown ray");
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  if (cones.empty()) throw Error(ErrorCode::InvalidFan, "fan without cones");
  std::vector<bool> used(rays.size(), false);
  for (const auto& c : cones)
    for (auto i : c) used[i] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::InvalidFan, "ray not contained in any cone");

  f.rays_ = std::move(rays);
  f.cones_ = std::move(cones);
  for (const auto& c : f.cones_) {
    const RatMatrix m = generator_matrix(f.rays_, c);
    const Rat det = rank == 0 ? Rat(1) : determinant(m);
    if (det.is_zero()) throw Error(ErrorCode::InvalidFan, "cone is not simplicial");
    f.cone_mult_.push_back(abs(det.num()));
    f.inverse_.push_back(rank == 0 ? RatMatrix{} : invert(m));
  }
  for (std::size_t i = 0; i < f.cones_.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones_.size(); ++j)
      if (!meet_properly(f.rays_, rank, f.cones_[i], f.cones_[j]))
        throw Error(ErrorCode::InvalidFan, "cones do not meet along a common face");
  f.build_walls();
  return f;
}

void Fan::build_walls() {
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    for (std::size_t k = 0; k < cones_[c].size(); ++k) {
      Cone facet = cones_[c];
      const std::size_t opposite = facet[k];
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      facets[facet].emplace_back(c, opposite);
    }
  }
  complete_ = true;
  for (const auto& [facet, owners] : facets) {
    if (owners.size() > 2) throw Error(ErrorCode::InvalidFan, "facet shared by more than two cones");
    if (owners.size() == 1) {
      complete_ = false;
      continue;
    }
    Wall w;
    w.left_cone = owners[0].first;
    w.left_ray = owners[0].second;
    w.right_cone = owners[1].first;
    w.right_ray = owners[1].second;
    w.shared = facet;
    // Columns: left, right, shared...
    std::vector<std::size_t> involved{w.left_ray, w.right_ray};
    involved.insert(involved.end(), facet.begin(), facet.end());
    RatMatrix a(rank_, RatVec(involved.size()));
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < involved.size(); ++c) a[r][c] = Rat(static_cast<long>(rays_[involved[c]][r]));
    const auto ker = kernel(a, involved.size());
    if (ker.size() != 1) throw Error(ErrorCode::InvalidFan, "wall relation is not a circuit");
    auto coeffs = primitive_integer(ker[0]);
    if (coeffs[0] < 0)
      for (auto& x : coeffs) x = -x;
    if (coeffs[0] <= 0 || coeffs[1] <= 0) throw Error(ErrorCode::InvalidFan, "adjacent cones on the same side of a wall");
    w.circuit.assign(rays_.size(), Int(0));
    for (std::size_t c = 0; c < involved.size(); ++c) w.circuit[involved[c]] = coeffs[c];
    std::vector<LatticeVec> shared_rays;
    for (auto i : facet) shared_rays.push_back(rays_[i]);
    w.multiplicity = lattice_multiplicity(shared_rays);
    walls_.push_back(std::move(w));
  }
}

bool Fan::is_smooth() const {
  return std::all_of(cone_mult_.begin(), cone_mult_.end(), [](const Int& m) { return m == 1; });
}

RatVec Fan::cone_coordinates(std::size_t c, std::span<const Rat> v) const {
  const auto& inv = inverse_[c];
  // v = V^T t  =>  t = (V^{-1})^T v
  RatVec t(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < rank_; ++k)
      if (!v[k].is_zero()) t[i] += inv[k][i] * v[k];
  return t;
}

RatVec Fan::cone_functional(std::size_t c, std::span<const Rat> values) const {
  const auto& inv = inverse_[c];
  RatVec m(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < rank_; ++k)
      if (!values[k].is_zero()) m[i] += inv[i][k] * values[k];
  return m;
}

std::optional<std::pair<std::size_t, RatVec>> Fan::locate(std::span<const Rat> v) const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    RatVec t = cone_coordinates(c, v);
    if (std::all_of(t.begin(), t.end(), [](const Rat& x) { return x.sign() >= 0; })) return std::make_pair(c, t);
  }
  return std::nullopt;
}

bool Fan::is_face(const Cone& face) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) {
    return std::includes(c.begin(), c.end(), face.begin(), face.end());
  });
}

}  // namespace mmp
