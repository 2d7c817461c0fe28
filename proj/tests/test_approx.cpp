#include <doctest.h>

#include "mmp/approx.hpp"
#include "mmp/corpus.hpp"
#include "mmp/error.hpp"
#include "oracle.hpp"

using namespace mmp;

namespace {

const QuadReal kS2m1(Rat(-1), Rat(1), Int(2));

ApproxCertificate cert(const std::variant<ApproxCertificate, NotFoundUpTo>& r) {
  REQUIRE(std::holds_alternative<ApproxCertificate>(r));
  return std::get<ApproxCertificate>(r);
}

}  // namespace

TEST_CASE("sqrt2 - 1 at one tenth") {
  const auto inst = ApproxInstance::make({{Int(1)}}, {kS2m1}, Rat(1, 10));
  const auto c = cert(approximate(inst, Int(1000)));
  CHECK(c.j == 12);
  CHECK(c.m == std::vector<Int>{5});
  CHECK(c.residual[0] == QuadReal(Rat(-17), Rat(12), Int(2)));
  CHECK(c.from_convergent);
  CHECK(verify(inst, c));
  CHECK(oracle::sign100(c.residual[0]) < 0);
  CHECK(oracle::abs_below100(c.residual[0], Rat(1, 10)));
}

TEST_CASE("a rational second coordinate") {
  const auto inst = ApproxInstance::make({{Int(1), Int(0)}, {Int(0), Int(1)}}, {kS2m1, Rat(1)}, Rat(1, 10));
  const auto c = cert(approximate(inst, Int(1000)));
  CHECK(c.j == 12);
  CHECK(c.m == std::vector<Int>{5, 12});
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(ApproxInstance::make({{Int(1)}}, {Rat(1, 2)}, Rat(1, 10)), Error);
  CHECK_THROWS_AS(ApproxInstance::make({{Int(0)}}, {kS2m1}, Rat(1, 10)), Error);
  CHECK_THROWS_AS(ApproxInstance::make({{Int(1)}}, {kS2m1}, Rat(0)), Error);
  CHECK_THROWS_AS(ApproxInstance::make({{Int(-1)}}, {kS2m1}, Rat(1, 10)), Error);
  CHECK_THROWS_AS(ApproxInstance::make({{Int(1), Int(1)}}, {kS2m1, QuadReal(Rat(0), Rat(1), Int(3))}, Rat(1, 10)),
                  Error);
}

TEST_CASE("search cap is an outcome, not a disproof") {
  const auto inst = ApproxInstance::make({{Int(1)}}, {kS2m1}, Rat(1, 1000));
  const auto r = approximate(inst, Int(3));
  REQUIRE(std::holds_alternative<NotFoundUpTo>(r));
  CHECK(std::get<NotFoundUpTo>(r).cap == 3);
}

TEST_CASE("halving eps keeps certificates valid") {
  corpus::Rng rng(3);
  for (long disc : {2L, 3L, 5L}) {
    const auto inst = corpus::approx_instance(rng, disc, Rat(1, 10));
    const auto half = ApproxInstance::make(inst.e, inst.d, inst.eps / Rat(2));
    const auto c = cert(approximate(half, Int(100000)));
    CHECK(verify(half, c));
    CHECK(verify(inst, c));
  }
}
