#include "mmp/io.hpp"

#include <fstream>
#include <sstream>

#include "mmp/error.hpp"

namespace mmp::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Rat parse_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  bad("expected an exact rational (\"p/q\" or integer), got " + j.dump());
}

RealNumber parse_real(const json& j) {
  if (j.is_object() && j.contains("rat")) return parse_rat(j.at("rat"));
  if (j.is_object() && j.contains("quad")) {
    const json& q = j.at("quad");
    return QuadReal(parse_rat(field(q, "a")), parse_rat(field(q, "b")), parse_int(field(q, "disc")));
  }
  return parse_rat(j);
}

TorusDivisor parse_divisor(const json& j, std::size_t rays) {
  if (!j.is_array()) bad("divisor must be a coefficient list");
  if (j.size() != rays) bad("divisor has " + std::to_string(j.size()) + " coefficients, fan has " + std::to_string(rays) + " rays");
  RatVec c;
  for (const auto& x : j) c.push_back(parse_rat(x));
  return TorusDivisor(std::move(c));
}

FanFile parse_fan_file(const json& j) {
  const auto rank = field(j, "rank").get<std::size_t>();
  std::vector<LatticeVec> rays;
  for (const auto& r : field(j, "rays")) rays.emplace_back(r.get<std::vector<std::int64_t>>());
  std::vector<Cone> cones;
  for (const auto& c : field(j, "cones")) cones.push_back(c.get<Cone>());
  FanFile f{Fan::make(rank, std::move(rays), std::move(cones)), {}, {}};
  if (j.contains("divisors"))
    for (const auto& [name, d] : j.at("divisors").items()) f.divisors.emplace(name, parse_divisor(d, f.fan.num_rays()));
  if (j.contains("pairs"))
    for (const auto& [name, d] : j.at("pairs").items()) f.pairs.emplace(name, parse_divisor(d, f.fan.num_rays()));
  return f;
}

ToricPair resolve_pair(const FanFile& f, const std::string& name) {
  if (auto it = f.pairs.find(name); it != f.pairs.end()) return ToricPair(f.fan, it->second);
  if (auto it = f.divisors.find(name); it != f.divisors.end()) return ToricPair(f.fan, it->second);
  if (name == "trivial") return ToricPair::trivial(f.fan);
  bad("unknown pair \"" + name + "\"");
}

TorusDivisor resolve_divisor(const FanFile& f, const std::string& name) {
  if (auto it = f.divisors.find(name); it != f.divisors.end()) return it->second;
  if (!name.empty() && name.front() == '[') {
    try {
      return parse_divisor(json::parse(name), f.fan.num_rays());
    } catch (const json::parse_error& e) {
      bad(std::string("inline divisor: ") + e.what());
    }
  }
  bad("unknown divisor \"" + name + "\"");
}

AdjointSequenceA1 parse_a1(const json& j) {
  std::vector<Rat> table;
  for (const auto& x : field(j, "table")) table.push_back(parse_rat(x));
  if (j.contains("horizon")) {
    const auto n = j.at("horizon").get<std::size_t>();
    if (n > table.size()) bad("horizon exceeds the table length");
    table.resize(n);
  }
  return AdjointSequenceA1::make(parse_rat(field(j, "b")), std::move(table), parse_real(field(j, "limit")));
}

ApproxInstance parse_instance(const json& j) {
  std::vector<std::vector<Int>> e;
  for (const auto& row : field(j, "E")) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(parse_int(x));
    e.push_back(std::move(r));
  }
  std::vector<RealNumber> d;
  for (const auto& x : field(j, "d")) d.push_back(parse_real(x));
  return ApproxInstance::make(std::move(e), std::move(d), parse_rat(field(j, "eps")));
}

StripInput parse_strip(const json& j) {
  StripInput s;
  for (const auto& t : field(j, "poly")) {
    if (!t.is_array() || t.size() != 3) bad("polynomial terms are [coefficient, deg_x, deg_y]");
    s.p += Poly2::monomial(parse_rat(t[0]), t[1].get<int>(), t[2].get<int>());
  }
  s.n = field(j, "n").get<int>();
  s.a = parse_int(field(j, "a"));
  s.r = parse_real(field(j, "r"));
  s.eps = parse_rat(field(j, "eps"));
  s.bound = field(j, "N").get<std::int64_t>();
  return s;
}

ojson to_json(const Rat& x) { return x.str(); }

ojson to_json(const QuadReal& x) {
  if (x.is_rational()) return x.a().str();
  return ojson{{"quad", {{"a", x.a().str()}, {"b", x.b().str()}, {"disc", x.disc().get_str()}}}};
}

ojson to_json(const RealNumber& x) {
  if (const Rat* r = std::get_if<Rat>(&x)) return to_json(*r);
  return to_json(std::get<QuadReal>(x));
}

ojson to_json(const TorusDivisor& d) {
  ojson a = ojson::array();
  for (const auto& x : d.coeffs()) a.push_back(x.str());
  return a;
}

ojson to_json(const LatticeVec& v) { return ojson(v.coords()); }

ojson to_json(const Fan& f) {
  ojson rays = ojson::array();
  for (const auto& r : f.rays()) rays.push_back(to_json(r));
  return ojson{{"rank", f.rank()}, {"rays", rays}, {"cones", f.cones()}};
}

}  // namespace mmp::io
