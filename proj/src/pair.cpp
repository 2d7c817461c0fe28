#include "mmp/pair.hpp"

#include <algorithm>
#include <map>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"

namespace mmp {

ToricPair::ToricPair(Fan fan, TorusDivisor boundary) : fan_(std::move(fan)), boundary_(std::move(boundary)) {
  if (boundary_.size() != fan_.num_rays()) throw Error(ErrorCode::DimensionMismatch, "boundary does not match fan");
}

ToricPair ToricPair::trivial(Fan fan) {
  const std::size_t n = fan.num_rays();
  return ToricPair(std::move(fan), TorusDivisor::zero(n));
}

bool ToricPair::is_boundary() const {
  return std::all_of(boundary_.coeffs().begin(), boundary_.coeffs().end(),
                     [](const Rat& d) { return d.sign() >= 0 && d <= Rat(1); });
}

TorusDivisor ToricPair::log_canonical() const { return canonical_divisor(fan_) + boundary_; }

TorusDivisor canonical_divisor(const Fan& fan) { return TorusDivisor(RatVec(fan.num_rays(), Rat(-1))); }

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Klt: return "klt";
    case SingularityClass::Plt: return "plt";
    case SingularityClass::Lc: return "lc";
    case SingularityClass::NotLc: return "not-lc";
  }
  return "?";
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

Rat log_discrepancy(const ToricPair& pair, const LatticeVec& v) {
  if (v.size() != pair.fan().rank()) throw Error(ErrorCode::DimensionMismatch, "valuation rank");
  const RatVec w = v.to_rat();
  const auto hit = pair.fan().locate(w);
  if (!hit) throw Error(ErrorCode::OutsideSupport, "valuation outside the support of the fan");
  const auto& [cone, t] = *hit;
  const Cone& rays = pair.fan().cones()[cone];
  Rat psi(0);
  for (std::size_t k = 0; k < rays.size(); ++k) psi += t[k] * (Rat(1) - pair.boundary()[rays[k]]);
  return psi;
}

Rat discrepancy(const ToricPair& pair, const LatticeVec& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "valuation must be nonzero");
  if (!v.is_primitive()) throw Error(ErrorCode::InvalidInput, "valuation must be primitive");
  return log_discrepancy(pair, v) - Rat(1);
}

namespace {

struct Subdivision {
  std::vector<LatticeVec> rays;
  std::vector<Rat> psi;
  std::vector<Cone> cones;
};

bool smooth(const std::vector<LatticeVec>& rays, const Cone& c) {
  std::vector<LatticeVec> gens;
  for (auto i : c) gens.push_back(rays[i]);
  return lattice_multiplicity(gens) == 1;
}

// Nonzero lattice point of the half-open parallelepiped of a full cone with
// the least coordinate sum, returned as (point, coordinates).
std::optional<std::pair<LatticeVec, RatVec>> parallelepiped_point(const std::vector<LatticeVec>& rays,
                                                                   const Cone& c) {
  const std::size_t n = rays[c[0]].size();
  RatMatrix cols(n, RatVec(c.size()));
  std::vector<std::int64_t> lo(n, 0), hi(n, 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t r = 0; r < n; ++r) {
      const std::int64_t x = rays[c[k]][r];
      cols[r][k] = Rat(x);
      (x < 0 ? lo[r] : hi[r]) += x;
    }
  Int box = 1;
  for (std::size_t r = 0; r < n; ++r) box *= Int(static_cast<long>(hi[r] - lo[r] + 1));
  if (box > Int(1'000'000)) return std::nullopt;
  std::optional<std::pair<LatticeVec, RatVec>> best;
  Rat best_sum;
  std::vector<std::int64_t> m = lo;
  while (true) {
    RatVec w;
    for (auto x : m) w.emplace_back(static_cast<long long>(x));
    if (auto t = solve_square(cols, w)) {
      const bool inside = std::all_of(t->begin(), t->end(), [](const Rat& x) { return x.sign() >= 0 && x < Rat(1); });
      const bool nonzero = std::any_of(t->begin(), t->end(), [](const Rat& x) { return !x.is_zero(); });
      if (inside && nonzero) {
        Rat s(0);
        for (const auto& x : *t) s += x;
        if (!best || s < best_sum) {
          best_sum = s;
          best.emplace(LatticeVec(m), *t);
        }
      }
    }
    std::size_t r = 0;
    while (r < n && m[r] == hi[r]) {
      m[r] = lo[r];
      ++r;
    }
    if (r == n) break;
    ++m[r];
  }
  return best;
}

void stellar(Subdivision& s, const LatticeVec& v, const Rat& psi, const Cone& face) {
  const std::size_t idx = s.rays.size();
  s.rays.push_back(v);
  s.psi.push_back(psi);
  std::vector<Cone> next;
  for (const Cone& c : s.cones) {
    if (!std::includes(c.begin(), c.end(), face.begin(), face.end())) {
      next.push_back(c);
      continue;
    }
    for (auto j : face) {
      Cone d;
      for (auto i : c)
        if (i != j) d.push_back(i);
      d.push_back(idx);
      std::sort(d.begin(), d.end());
      next.push_back(std::move(d));
    }
  }
  s.cones = std::move(next);
}

// Smooth refinement whose new rays all have positive log discrepancy.
Answer dlt_search(const ToricPair& pair, int depth) {
  const Fan& fan = pair.fan();
  Subdivision s{fan.rays(), {}, fan.cones()};
  for (std::size_t i = 0; i < fan.num_rays(); ++i) s.psi.push_back(Rat(1) - pair.boundary()[i]);
  for (int round = 0;; ++round) {
    std::vector<Cone> bad;
    for (const Cone& c : s.cones)
      if (!smooth(s.rays, c)) bad.push_back(c);
    if (bad.empty()) return Answer::Yes;
    if (round == depth) return Answer::Unknown;
    for (const Cone& c : bad) {
      if (std::find(s.cones.begin(), s.cones.end(), c) == s.cones.end()) continue;
      const auto p = parallelepiped_point(s.rays, c);
      if (!p) return Answer::Unknown;
      const auto& [v, t] = *p;
      Cone face;
      Rat psi(0);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!t[k].is_zero()) {
          face.push_back(c[k]);
          psi += t[k] * s.psi[c[k]];
        }
      if (psi.sign() <= 0) return Answer::No;
      stellar(s, v, psi, face);
    }
  }
}

}  // namespace

SingularityReport classify(const ToricPair& pair, int dlt_depth) {
  const Fan& fan = pair.fan();
  const TorusDivisor& d = pair.boundary();
  SingularityReport rep{SingularityClass::Klt, Answer::Yes, {}};

  // On a simplicial cone the log discrepancy is linear, so its minimum over
  // the simplex spanned by the generators is the least vertex value 1 - d_i.
  bool lc = true;
  bool klt = true;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (d[i] >= Rat(1)) {
      rep.witnesses.push_back({fan.ray(i), -d[i]});
      klt = false;
      if (d[i] > Rat(1)) lc = false;
    }
  }
  if (!lc) {
    rep.cls = SingularityClass::NotLc;
    rep.dlt = Answer::No;
    return rep;
  }
  if (klt) return rep;

  // Exceptional valuations with log discrepancy zero live exactly in the
  // relative interiors of faces spanned by two or more rays with d_i = 1.
  bool plt = true;
  bool bad_face = false;
  std::map<Cone, bool> seen;
  for (const Cone& c : fan.cones()) {
    Cone reduced;
    for (auto i : c)
      if (d[i] == Rat(1)) reduced.push_back(i);
    if (reduced.size() < 2 || seen.count(reduced)) continue;
    seen[reduced] = true;
    plt = false;
    std::vector<LatticeVec> gens;
    std::vector<std::int64_t> sum(fan.rank(), 0);
    for (auto i : reduced) {
      gens.push_back(fan.ray(i));
      for (std::size_t k = 0; k < fan.rank(); ++k) sum[k] += fan.ray(i)[k];
    }
    const LatticeVec w = primitive(sum);
    rep.witnesses.push_back({w, discrepancy(pair, w)});
    if (lattice_multiplicity(gens) != 1) bad_face = true;
  }
  rep.cls = plt ? SingularityClass::Plt : SingularityClass::Lc;
  rep.dlt = bad_face ? Answer::No : dlt_search(pair, dlt_depth);
  return rep;
}

std::optional<Rat> lct(const ToricPair& pair, const TorusDivisor& d) {
  const Fan& fan = pair.fan();
  if (d.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "divisor does not match fan");
  if (!d.is_effective()) throw Error(ErrorCode::NonEffective, "lct needs an effective divisor");
  if (classify(pair, 0).cls != SingularityClass::Klt) throw Error(ErrorCode::NotKlt, "lct needs a klt pair");
  if (d.is_zero()) return std::nullopt;
  // Per cone: minimise the log discrepancy over the section {ord_D = 1} of
  // the cone, in cone coordinates t >= 0.
  std::optional<Rat> best;
  for (const Cone& c : fan.cones()) {
    const std::size_t k = c.size();
    std::vector<HalfSpace> rows;
    RatVec objective(k), order(k);
    bool meets = false;
    for (std::size_t j = 0; j < k; ++j) {
      RatVec e(k);
      e[j] = Rat(1);
      rows.push_back({e, Rat(0), false});
      objective[j] = Rat(1) - pair.boundary()[c[j]];
      order[j] = d[c[j]];
      meets = meets || d[c[j]].sign() > 0;
    }
    if (!meets) continue;
    rows.push_back({order, Rat(1), true});
    const LpResult r = lp_minimize(rows, objective);
    const Rat value = std::get<LpOptimum>(r).value;
    if (!best || value < *best) best = value;
  }
  return best;
}

NefThreshold nef_threshold(const ToricPair& pair, const TorusDivisor& h, const Int& a) {
  const Fan& fan = pair.fan();
  if (a <= 0) throw Error(ErrorCode::InvalidInput, "a must be positive");
  if (h.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "H does not match fan");
  if (classify(pair, 0).cls != SingularityClass::Klt) throw Error(ErrorCode::NotKlt, "nef threshold needs a klt pair");
  const TorusDivisor k = pair.log_canonical();
  if (!is_cartier(fan, Rat(a) * k)) throw Error(ErrorCode::NotCartier, "a(K + Delta) is not Cartier");
  if (!is_cartier(fan, h)) throw Error(ErrorCode::NotCartier, "H is not Cartier");
  if (!is_nef(fan, h) || !is_big(fan, h)) throw Error(ErrorCode::NotNefBig, "H must be nef and big");
  std::optional<Rat> r;
  for (const Wall& w : fan.walls()) {
    const Rat kc = intersection_number(fan, k, w);
    if (kc.sign() >= 0) continue;
    const Rat t = intersection_number(fan, h, w) / -kc;
    if (!r || t < *r) r = t;
  }
  if (!r) throw Error(ErrorCode::AlreadyNef, "K + Delta is nef");
  NefThreshold out{*r, r->num(), r->den()};
  if (out.v > a * Int(static_cast<long>(fan.rank() + 1)))
    throw Error(ErrorCode::BoundViolation, "denominator exceeds a(dim X + 1)");
  return out;
}

Rat rationality_bound(const Int& a, const Int& n, const Rat& eps) {
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidInput, "eps must be positive");
  return Rat(Int(a * (n + 1))) / eps;
}

}  // namespace mmp
