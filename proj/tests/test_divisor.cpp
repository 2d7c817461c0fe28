#include <doctest.h>

#include "mmp/corpus.hpp"
#include "mmp/divisor.hpp"
#include "mmp/error.hpp"
#include "oracle.hpp"

using namespace mmp;

namespace {

TorusDivisor div(std::initializer_list<long> c) {
  RatVec v;
  for (long x : c) v.emplace_back(x);
  return TorusDivisor(v);
}

TorusDivisor random_divisor(std::size_t n, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> c(lo, hi);
  RatVec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(c(rng));
  return TorusDivisor(v);
}

}  // namespace

TEST_CASE("intersection numbers on P2 and F1") {
  const Fan p2 = corpus::projective_space(2);
  for (const auto& w : p2.walls()) CHECK(intersection_number(p2, div({1, 0, 0}), w) == 1);
  const Fan f1 = corpus::hirzebruch(1);
  const TorusDivisor e = div({0, 1, 0, 0});
  for (const auto& w : f1.walls()) {
    const Cone r = w.rays();
    if (r == Cone{0, 1, 2}) CHECK(intersection_number(f1, e, w) == -1);
  }
}

TEST_CASE("intersection numbers match the relation oracle") {
  std::mt19937_64 rng(21);
  std::vector<Fan> fans;
  for (const auto& s : corpus::smooth_surfaces(20, rng)) fans.push_back(s.fan);
  for (const auto& s : corpus::smooth_threefolds(5, rng)) fans.push_back(s.fan);
  fans.push_back(Fan::make(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}));
  fans.push_back(Fan::make(2, {{1, 0}, {1, 3}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}));
  for (const auto& f : fans) {
    const TorusDivisor d = random_divisor(f.num_rays(), rng, -3, 3);
    for (const auto& w : f.walls()) CHECK(intersection_number(f, d, w) == oracle::intersection(f, d, w));
  }
}

TEST_CASE("nef, ample and global generation") {
  const Fan p2 = corpus::projective_space(2);
  CHECK(is_ample(p2, div({1, 0, 0})));
  CHECK(is_nef(p2, div({0, 0, 0})));
  CHECK_FALSE(is_ample(p2, div({0, 0, 0})));
  CHECK_FALSE(is_nef(p2, div({-1, 0, 0})));
  const Fan f1 = corpus::hirzebruch(1);
  CHECK(is_nef(f1, div({1, 0, 0, 0})));
  CHECK_FALSE(is_ample(f1, div({1, 0, 0, 0})));
  CHECK(is_ample(f1, div({1, 0, 0, 2})));
  std::mt19937_64 rng(8);
  for (const auto& s : corpus::smooth_surfaces(15, rng)) {
    const TorusDivisor d = random_divisor(s.fan.num_rays(), rng, 0, 3);
    bool nef = true;
    for (const auto& w : s.fan.walls()) nef = nef && oracle::intersection(s.fan, d, w).sign() >= 0;
    CHECK(is_nef(s.fan, d) == nef);
    // smooth complete toric: nef <=> basepoint free
    CHECK(is_globally_generated(s.fan, d) == nef);
    CHECK(is_ample(s.fan, corpus::ample_divisor(s.fan, rng)));
  }
}

TEST_CASE("Cartier data on a singular surface") {
  const Fan wp = Fan::make(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
  // the singular cone is spanned by rays 0 and 2
  CHECK_FALSE(is_cartier(wp, div({1, 0, 0})));
  CHECK(is_cartier(wp, div({2, 0, 0})));
  CHECK(is_cartier(wp, div({0, 1, 0})));
}

TEST_CASE("global sections") {
  const Fan p2 = corpus::projective_space(2);
  CHECK(h0(p2, div({2, 0, 0})) == 6);
  CHECK(h0(p2, div({-1, 0, 0})) == 0);
  CHECK(h0(p2, div({0, 0, 0})) == 1);
  CHECK(is_big(p2, div({1, 0, 0})));
  CHECK_FALSE(is_big(corpus::hirzebruch(1), div({1, 0, 0, 0})));
  CHECK(DivisorPolytope(p2, div({1, 0, 0})).dimension() == 2);
  CHECK(DivisorPolytope(p2, div({0, 0, 0})).dimension() == 0);
  CHECK(DivisorPolytope(p2, div({-1, 0, 0})).dimension() == -1);
  CHECK(DivisorPolytope(corpus::hirzebruch(1), div({1, 0, 0, 0})).dimension() == 1);
  CHECK_THROWS_AS(h0(p2, TorusDivisor(RatVec{Rat(1, 2), Rat(0), Rat(0)})), Error);
}

TEST_CASE("Mob and Fix against brute force") {
  const Fan f1 = corpus::hirzebruch(1);
  const MobFix e = mob_fix(f1, div({0, 1, 0, 0}));
  CHECK(e.fix == div({0, 1, 0, 0}));
  CHECK(e.mob.is_zero());
  std::mt19937_64 rng(13);
  std::size_t nonzero_fix = 0;
  for (const auto& s : corpus::smooth_surfaces(25, rng)) {
    const TorusDivisor d = random_divisor(s.fan.num_rays(), rng, -1, 3);
    const auto fix = oracle::fix(s.fan, d);
    CHECK(h0(s.fan, d) == oracle::points(s.fan, d).size());
    if (!fix) {
      CHECK_THROWS_AS(mob_fix(s.fan, d), Error);
      continue;
    }
    const MobFix mf = mob_fix(s.fan, d);
    CHECK(mf.fix == *fix);
    CHECK(mf.mob + mf.fix == d);
    CHECK(h0(s.fan, mf.mob) == h0(s.fan, d));
    if (!mf.fix.is_zero()) ++nonzero_fix;
  }
  CHECK(nonzero_fix > 0);
}
