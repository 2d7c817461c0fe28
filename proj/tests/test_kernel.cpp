#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

#include "mmp/error.hpp"
#include "mmp/lp.hpp"
#include "mmp/quad_real.hpp"
#include "oracle.hpp"

using namespace mmp;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

Float50 f50(const Rat& x) { return Float50(x.num().get_str()) / Float50(x.den().get_str()); }
Float50 f50(const QuadReal& x) {
  return f50(x.a()) + f50(x.b()) * boost::multiprecision::sqrt(Float50(x.disc().get_str()));
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
  CHECK(Rat::parse("7").is_integer());
  CHECK(Rat::parse("-7/2").floor() == -4);
  CHECK(Rat::parse("-7/2").ceil() == -3);
  CHECK(Rat::parse("-7/2").frac() == Rat(1, 2));
  CHECK(code_of([] { Rat::parse("1.5"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Rat(1) / Rat(0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Rat(Int(1), Int(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("quadratic reals: sign and floor agree with 50-digit floats") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-200, 200), den(1, 30);
  const long discs[] = {2, 3, 5, 6, 7, 10, 13};
  for (int t = 0; t < 2000; ++t) {
    const QuadReal x(Rat(Int(num(rng)), Int(den(rng))), Rat(Int(num(rng)), Int(den(rng))), Int(discs[t % 7]));
    const Float50 f = f50(x);
    CHECK(x.sign() == (f > 0 ? 1 : (f < 0 ? -1 : 0)));
    CHECK(Float50(x.floor().get_str()) == boost::multiprecision::floor(f));
    if (x.sign() != 0) {
      const QuadReal inv = x.inverse();
      CHECK(boost::multiprecision::abs(f50(inv) * f - 1) < Float50("1e-40"));
      CHECK((inv * x) == QuadReal(Rat(1)));
    }
  }
}

TEST_CASE("quadratic reals reject bad fields") {
  CHECK(code_of([] { QuadReal(Rat(0), Rat(1), Int(8)); }) == ErrorCode::NotSquareFree);
  CHECK(code_of([] { QuadReal(Rat(0), Rat(1), Int(2)) + QuadReal(Rat(0), Rat(1), Int(3)); }) ==
        ErrorCode::DifferentFields);
  CHECK(code_of([] { QuadReal().inverse(); }) == ErrorCode::DivisionByZero);
  // A rational value mixes with any field.
  CHECK((QuadReal(Rat(1, 2)) + QuadReal(Rat(0), Rat(1), Int(3))).disc() == 3);
}

TEST_CASE("convergent denominators of sqrt2 - 1") {
  const auto d = convergent_denominators(QuadReal(Rat(-1), Rat(1), Int(2)), 6);
  REQUIRE(d.size() == 6);
  CHECK(d == std::vector<Int>{1, 2, 5, 12, 29, 70});
  const auto r = convergent_denominators(QuadReal(Rat(3, 8)), 10);
  CHECK(r.back() == 8);
}

TEST_CASE("determinant and rank against Bareiss") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    RatMatrix m(n, RatVec(n));
    std::vector<std::vector<Int>> mi(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long x = c(rng);
        m[i][j] = Rat(x);
        mi[i][j] = x;
      }
    const Int d = oracle::det(mi);
    CHECK(determinant(m) == Rat(d));
    CHECK((rank(m) == n) == (d != 0));
  }
}

TEST_CASE("integer kernel and multiplicity") {
  const auto k = integer_kernel({{Int(1), Int(1), Int(-2)}}, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + v[1] - 2 * v[2] == 0);
  const std::vector<LatticeVec> cone{{1, 0}, {1, 2}};
  CHECK(lattice_multiplicity(cone) == 2);
  const std::vector<LatticeVec> face{{2, 4, 0}};
  CHECK(lattice_multiplicity(face) == 2);
  CHECK(primitive(LatticeVec{4, -6}) == LatticeVec{2, -3});
  CHECK(code_of([] { primitive(LatticeVec{0, 0}); }) == ErrorCode::ZeroVector);
}

TEST_CASE("LP optimum equals the best vertex of random polygons") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<HalfSpace> hs;
    // a bounding box keeps the polygon compact
    hs.push_back({{Rat(1), Rat(0)}, Rat(-6)});
    hs.push_back({{Rat(-1), Rat(0)}, Rat(-6)});
    hs.push_back({{Rat(0), Rat(1)}, Rat(-6)});
    hs.push_back({{Rat(0), Rat(-1)}, Rat(-6)});
    for (int k = 0; k < 4; ++k) hs.push_back({{Rat(c(rng)), Rat(c(rng))}, Rat(c(rng))});
    const RatVec obj{Rat(c(rng)), Rat(c(rng))};
    // vertices: feasible intersections of constraint pairs
    std::optional<Rat> best;
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        const auto p = solve_square({hs[i].normal, hs[j].normal}, {hs[i].offset, hs[j].offset});
        if (!p) continue;
        bool ok = true;
        for (const auto& h : hs) ok = ok && dot(h.normal, *p) >= h.offset;
        if (!ok) continue;
        const Rat v = dot(obj, *p);
        best = best ? min(*best, v) : v;
      }
    if (!best) {
      CHECK(!lp_feasible(hs, 2));
      continue;
    }
    const auto r = lp_minimize(hs, obj);
    REQUIRE(std::holds_alternative<LpOptimum>(r));
    CHECK(std::get<LpOptimum>(r).value == *best);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("ILP equals the best integer point of random polygons") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> c(-5, 5), den(1, 3);
  for (int t = 0; t < 150; ++t) {
    std::vector<HalfSpace> hs;
    hs.push_back({{Rat(1), Rat(0)}, Rat(-7)});
    hs.push_back({{Rat(-1), Rat(0)}, Rat(-7)});
    hs.push_back({{Rat(0), Rat(1)}, Rat(-7)});
    hs.push_back({{Rat(0), Rat(-1)}, Rat(-7)});
    for (int k = 0; k < 3; ++k) hs.push_back({{Rat(c(rng)), Rat(c(rng))}, Rat(Int(c(rng)), Int(den(rng)))});
    const RatVec obj{Rat(c(rng)), Rat(c(rng))};
    std::optional<Rat> best;
    for (long x = -7; x <= 7; ++x)
      for (long y = -7; y <= 7; ++y) {
        const RatVec p{Rat(x), Rat(y)};
        bool ok = true;
        for (const auto& h : hs) ok = ok && dot(h.normal, p) >= h.offset;
        if (ok) best = best ? min(*best, dot(obj, p)) : dot(obj, p);
      }
    CHECK(ilp_minimize(hs, obj) == best);
  }
}

TEST_CASE("cone membership") {
  const std::vector<RatVec> gens{{Rat(1), Rat(0)}, {Rat(1), Rat(2)}};
  CHECK(in_cone(gens, RatVec{Rat(2), Rat(1)}));
  CHECK_FALSE(in_cone(gens, RatVec{Rat(0), Rat(1)}));
  CHECK(in_cone(gens, RatVec{Rat(0), Rat(0)}));
}
