#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "mmp/adjoint.hpp"
#include "mmp/approx.hpp"
#include "mmp/pair.hpp"
#include "mmp/strip.hpp"

namespace mmp::io {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Parses a file; syntax errors carry the byte position.
json read_file(const std::string& path);

/// "p/q" strings or JSON integers; decimals are rejected.
Rat parse_rat(const json& j);
/// "p/q", {"rat": "p/q"} or {"quad": {"a": .., "b": .., "disc": n}}.
RealNumber parse_real(const json& j);
TorusDivisor parse_divisor(const json& j, std::size_t rays);

/// {"rank", "rays", "cones", "divisors"?, "pairs"?}
struct FanFile {
  Fan fan;
  std::map<std::string, TorusDivisor> divisors;
  std::map<std::string, TorusDivisor> pairs;
};
FanFile parse_fan_file(const json& j);

/// Boundary lookup: "pairs", then "divisors"; "trivial" means Delta = 0.
ToricPair resolve_pair(const FanFile& f, const std::string& name);
/// A divisor name or an inline coefficient list.
TorusDivisor resolve_divisor(const FanFile& f, const std::string& name);

AdjointSequenceA1 parse_a1(const json& j);
ApproxInstance parse_instance(const json& j);

struct StripInput {
  Poly2 p;
  int n = 0;
  Int a;
  RealNumber r;
  Rat eps;
  std::int64_t bound = 0;
};
StripInput parse_strip(const json& j);

ojson to_json(const Rat& x);
ojson to_json(const QuadReal& x);
ojson to_json(const RealNumber& x);
ojson to_json(const TorusDivisor& d);
ojson to_json(const LatticeVec& v);
ojson to_json(const Fan& f);

}  // namespace mmp::io
