#include <doctest.h>

#include <algorithm>
#include <random>

#include "mmp/corpus.hpp"
#include "mmp/error.hpp"
#include "mmp/mori.hpp"
#include "oracle.hpp"

using namespace mmp;

namespace {

TorusDivisor div(std::initializer_list<Rat> c) { return TorusDivisor(RatVec(c)); }

const Fan& circuit_fan() {
  static const Fan f = Fan::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, {{0, 1, 2}, {0, 1, 3}});
  return f;
}

ExtremalRay negative_ray(const ToricPair& pair) {
  for (const auto& r : mori_cone_generators(pair))
    if (r.k_degree.sign() < 0) return r;
  FAIL("no negative ray");
  return {};
}

// Smooth complete surface fan with three rays summing to zero: P^2.
bool is_p2(const Fan& f) {
  if (f.rank() != 2 || f.num_rays() != 3 || !f.is_complete() || !f.is_smooth()) return false;
  LatticeVec s{0, 0};
  for (const auto& r : f.rays()) s = s + r;
  return s.is_zero();
}

}  // namespace

TEST_CASE("Mori cone generators") {
  CHECK(mori_cone_generators(ToricPair::trivial(corpus::projective_space(2))).size() == 1);
  CHECK(mori_cone_generators(ToricPair::trivial(corpus::hirzebruch(0))).size() == 2);
  CHECK(mori_cone_generators(ToricPair::trivial(corpus::hirzebruch(1))).size() == 2);
  CHECK(wall_classes(ToricPair::trivial(corpus::hirzebruch(1))).size() == 3);
  const auto p2 = mori_cone_generators(ToricPair::trivial(corpus::projective_space(2)));
  CHECK(p2[0].walls.size() == 3);
  CHECK(p2[0].k_degree == -3);
}

TEST_CASE("K-degrees match oracle intersections") {
  std::mt19937_64 rng(51);
  for (const auto& s : corpus::smooth_surfaces(15, rng)) {
    const ToricPair pair(s.fan, corpus::klt_boundary(s.fan, rng));
    for (const auto& r : wall_classes(pair))
      CHECK(r.k_degree == oracle::intersection(s.fan, pair.log_canonical(), s.fan.walls()[r.wall]));
  }
}

TEST_CASE("contractions of surfaces") {
  const ToricPair f1 = ToricPair::trivial(corpus::hirzebruch(1));
  bool found = false;
  for (const auto& r : mori_cone_generators(f1)) {
    const ContractionStep step = contract(f1, r);
    if (step.kind != ContractionKind::Divisorial) continue;
    found = true;
    CHECK(step.removed_rays == std::vector<std::size_t>{1});
    REQUIRE(step.target);
    CHECK(is_p2(*step.target));
  }
  CHECK(found);

  const ToricPair p2 = ToricPair::trivial(corpus::projective_space(2));
  const ContractionStep point = contract(p2, negative_ray(p2));
  CHECK(point.kind == ContractionKind::Fibration);
  REQUIRE(point.base);
  CHECK(point.base->rank() == 0);

  const ToricPair q = ToricPair::trivial(corpus::hirzebruch(0));
  const ContractionStep ruling = contract(q, negative_ray(q));
  CHECK(ruling.kind == ContractionKind::Fibration);
  REQUIRE(ruling.base);
  CHECK(ruling.base->rank() == 1);
  CHECK(ruling.base->num_rays() == 2);
  CHECK(ruling.base->is_complete());
}

TEST_CASE("contraction preconditions") {
  const ToricPair trivial = ToricPair::trivial(circuit_fan());
  const auto rays = mori_cone_generators(trivial);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0].k_degree == 0);
  CHECK_THROWS_AS(contract(trivial, rays[0]), Error);
  try {
    contract(trivial, rays[0]);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNegative);
  }
}

TEST_CASE("the circuit flip and its inverse") {
  const ToricPair x(circuit_fan(), div({Rat(1, 2), 0, 0, 0}));
  const ContractionStep step = contract(x, negative_ray(x));
  REQUIRE(step.kind == ContractionKind::Flipping);
  const FlipResult f = flip(x, step, 100, 1);
  std::vector<Cone> cones = f.pair.fan().cones();
  std::sort(cones.begin(), cones.end());
  CHECK(cones == std::vector<Cone>{{0, 2, 3}, {1, 2, 3}});
  CHECK(f.pair.fan().rays() == x.fan().rays());
  CHECK(f.new_k_degree == Rat(1, 2));
  CHECK(f.samples == 100);
  CHECK(f.strict > 0);

  // independent monotonicity check on fresh valuations
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> c(0, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::int64_t> v(3, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      const long k = c(rng);
      for (std::size_t j = 0; j < 3; ++j) v[j] += k * x.fan().ray(i)[j];
    }
    if (std::all_of(v.begin(), v.end(), [](auto a) { return a == 0; })) continue;
    const auto p = primitive(LatticeVec(v)).coords();
    const auto before = oracle::log_discrepancy(x, p);
    const auto after = oracle::log_discrepancy(f.pair, p);
    REQUIRE(before);
    REQUIRE(after);
    CHECK(*after >= *before);
  }

  const ToricPair y(f.pair.fan(), div({0, 0, Rat(1, 2), 0}));
  const ContractionStep back = contract(y, negative_ray(y));
  REQUIRE(back.kind == ContractionKind::Flipping);
  std::vector<Cone> again = flip(y, back).pair.fan().cones();
  std::sort(again.begin(), again.end());
  CHECK(again == std::vector<Cone>{{0, 1, 2}, {0, 1, 3}});
}

TEST_CASE("MMP traces") {
  const MmpTrace f1 = run_mmp(ToricPair::trivial(corpus::hirzebruch(1)));
  REQUIRE(f1.steps.size() == 2);
  CHECK(f1.steps[0].kind == ContractionKind::Divisorial);
  CHECK(f1.steps[1].kind == ContractionKind::Fibration);
  CHECK(f1.outcome == MmpOutcome::MoriFibreSpace);
  CHECK(f1.steps[0].picard_before == 2);
  CHECK(f1.steps[0].picard_after == 1);

  MmpOptions scaling;
  scaling.mode = MmpMode::Scaling;
  scaling.scale = div({3, 0, 0});
  const MmpTrace p2 = run_mmp(ToricPair::trivial(corpus::projective_space(2)), scaling);
  REQUIRE(p2.steps.size() == 1);
  CHECK(p2.steps[0].lambda == Rat(1));
  CHECK(p2.outcome == MmpOutcome::MoriFibreSpace);

  const MmpTrace nef = run_mmp(ToricPair(corpus::projective_space(2), div({1, 1, 1})));
  CHECK(nef.steps.empty());
  CHECK(nef.outcome == MmpOutcome::MinimalModel);

  MmpOptions tight;
  tight.budget = 1;
  const MmpTrace cut = run_mmp(ToricPair::trivial(corpus::hirzebruch(1)), tight);
  CHECK(cut.outcome == MmpOutcome::BudgetExceeded);
  CHECK(cut.steps.size() == 1);

  MmpOptions rev;
  rev.tie_break = TieBreak::RevLex;
  const MmpTrace r = run_mmp(ToricPair::trivial(corpus::hirzebruch(1)), rev);
  CHECK(r.outcome == MmpOutcome::MoriFibreSpace);
}

TEST_CASE("surface MMP never flips") {
  std::mt19937_64 rng(61);
  for (const auto& s : corpus::smooth_surfaces(30, rng)) {
    const MmpTrace t = run_mmp(ToricPair::trivial(s.fan));
    CHECK(t.steps.size() <= s.fan.num_rays() - 2);
    for (const auto& st : t.steps) CHECK(st.kind != ContractionKind::Flipping);
    CHECK(t.outcome == MmpOutcome::MoriFibreSpace);
  }
}
