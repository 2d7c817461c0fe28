// Command-line front end. Every report is JSON on stdout with exact
// fraction strings; exit 0 on success, 2 on a negative verdict, 1 on bad
// input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "mmp/corpus.hpp"
#include "mmp/error.hpp"
#include "mmp/io.hpp"
#include "mmp/mori.hpp"

using namespace mmp;
using io::ojson;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

struct RunConfig {
  std::string input;
  std::string pair = "trivial";
  std::string output;
  bool decimal = false;
  std::uint64_t seed = 1;
  std::uint64_t corpus_seed = 20240601;
};

RunConfig cfg;

void put(ojson& obj, const std::string& key, const Rat& x) {
  obj[key] = x.str();
  if (cfg.decimal) obj[key + "_decimal"] = x.to_double();
}

void put(ojson& obj, const std::string& key, const QuadReal& x) {
  obj[key] = io::to_json(x);
  if (cfg.decimal) obj[key + "_decimal"] = x.approx();
}

int emit(const ojson& report, int code) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.output);
    out << text;
  }
  return code;
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidFan:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ZeroVector:
    case ErrorCode::NotSquareFree:
    case ErrorCode::DivisionByZero:
    case ErrorCode::DifferentFields:
    case ErrorCode::NonIntegralDivisor:
    case ErrorCode::NonEffective:
    case ErrorCode::InvalidSequence:
    case ErrorCode::InvalidInstance:
    case ErrorCode::DegreeMismatch:
      return true;
    default:
      return false;
  }
}

ojson sat_json(const SaturationVerdict& s) {
  ojson o{{"verdict", s.saturated ? "saturated" : "violation"}};
  if (!s.saturated) {
    o["i"] = s.limit_form ? ojson("limit") : ojson(s.i);
    o["j"] = s.j;
  }
  return o;
}

ojson step_json(const MmpStep& s) {
  ojson o{{"kind", to_string(s.kind)}, {"wall_rays", s.wall_rays}};
  o["curve_class"] = ojson::array();
  for (const auto& x : s.ray.curve_class) o["curve_class"].push_back(x.str());
  put(o, "k_degree", s.ray.k_degree);
  if (s.lambda) put(o, "lambda", *s.lambda);
  o["removed_rays"] = s.removed_rays;
  o["picard_before"] = s.picard_before;
  o["picard_after"] = s.picard_after;
  o["fan_before"] = io::to_json(s.before.fan());
  o["boundary_before"] = io::to_json(s.before.boundary());
  return o;
}

int cmd_classify(int depth) {
  const auto file = io::parse_fan_file(io::read_file(cfg.input));
  const ToricPair pair = io::resolve_pair(file, cfg.pair);
  const SingularityReport rep = classify(pair, depth);
  ojson o{{"command", "classify"}, {"pair", cfg.pair}, {"class", to_string(rep.cls)}, {"dlt", to_string(rep.dlt)}};
  o["witnesses"] = ojson::array();
  for (const auto& w : rep.witnesses) {
    ojson x{{"valuation", io::to_json(w.valuation)}};
    put(x, "discrepancy", w.discrepancy);
    o["witnesses"].push_back(x);
  }
  return emit(o, rep.cls == SingularityClass::NotLc ? kNegative : kOk);
}

int cmd_lct(const std::string& dname) {
  const auto file = io::parse_fan_file(io::read_file(cfg.input));
  const auto value = lct(io::resolve_pair(file, cfg.pair), io::resolve_divisor(file, dname));
  ojson o{{"command", "lct"}, {"pair", cfg.pair}, {"divisor", dname}};
  if (value)
    put(o, "lct", *value);
  else
    o["lct"] = "+inf";
  return emit(o, kOk);
}

int cmd_nef_threshold(const std::string& hname, long a) {
  const auto file = io::parse_fan_file(io::read_file(cfg.input));
  const ToricPair pair = io::resolve_pair(file, cfg.pair);
  const NefThreshold t = nef_threshold(pair, io::resolve_divisor(file, hname), Int(a));
  ojson o{{"command", "nef-threshold"}, {"pair", cfg.pair}, {"H", hname}};
  put(o, "r", t.r);
  o["u"] = t.u.get_str();
  o["v"] = t.v.get_si();
  o["bound"] = a * static_cast<long>(pair.fan().rank() + 1);
  return emit(o, kOk);
}

int cmd_strip() {
  const auto s = io::parse_strip(io::read_file(cfg.input));
  const StripVerdict v = strip_vanishing_verify(s.p, s.n, s.a, s.r, s.eps, s.bound);
  ojson o{{"command", "strip-verify"}, {"outcome", to_string(v.outcome)}, {"points", v.points}};
  if (v.witness) o["witness"] = {v.witness->first, v.witness->second};
  o["factors"] = ojson::array();
  for (const auto& f : v.factors)
    o["factors"].push_back({{"factor", f.str()}, {"x", f.x.get_str()}, {"y", f.y.get_str()}, {"c", f.c.get_str()},
                            {"multiplicity", f.multiplicity}});
  put(o, "bound", v.bound);
  if (v.bound_ok) o["bound_ok"] = *v.bound_ok;
  const bool negative = v.outcome == StripOutcome::NotVanishing || v.outcome == StripOutcome::InsufficientEvidence;
  return emit(o, negative ? kNegative : kOk);
}

int cmd_mmp(const std::string& mode, const std::string& scale, std::size_t budget, const std::string& tie) {
  const auto file = io::parse_fan_file(io::read_file(cfg.input));
  MmpOptions opt;
  opt.budget = budget;
  if (tie == "revlex")
    opt.tie_break = TieBreak::RevLex;
  else if (tie != "lex")
    throw Error(ErrorCode::InvalidInput, "tie-break must be lex or revlex");
  if (mode == "scaling") {
    opt.mode = MmpMode::Scaling;
    if (scale.empty()) throw Error(ErrorCode::InvalidInput, "--scale-divisor is required in scaling mode");
    opt.scale = io::resolve_divisor(file, scale);
  } else if (mode != "plain") {
    throw Error(ErrorCode::InvalidInput, "mode must be plain or scaling");
  }
  const MmpTrace t = run_mmp(io::resolve_pair(file, cfg.pair), opt);
  ojson o{{"command", "mmp-run"}, {"pair", cfg.pair}, {"mode", mode}, {"outcome", to_string(t.outcome)}};
  o["steps"] = ojson::array();
  for (const auto& s : t.steps) o["steps"].push_back(step_json(s));
  o["result_fan"] = io::to_json(t.result.fan());
  o["result_boundary"] = io::to_json(t.result.boundary());
  if (t.base) o["base"] = io::to_json(*t.base);
  return emit(o, t.outcome == MmpOutcome::BudgetExceeded ? kNegative : kOk);
}

int cmd_flip(std::size_t samples) {
  const auto file = io::parse_fan_file(io::read_file(cfg.input));
  const ToricPair pair = io::resolve_pair(file, cfg.pair);
  for (const auto& r : mori_cone_generators(pair)) {
    if (r.k_degree.sign() >= 0) continue;
    const ContractionStep step = contract(pair, r);
    if (step.kind != ContractionKind::Flipping) continue;
    const FlipResult f = flip(pair, step, samples, cfg.seed);
    ojson o{{"command", "flip"}, {"pair", cfg.pair}, {"before", io::to_json(pair.fan())},
            {"after", io::to_json(f.pair.fan())}, {"new_walls", f.new_walls}};
    put(o, "new_k_degree", f.new_k_degree);
    o["checks"] = {{"small", true}, {"k_positive", true}, {"relative_picard_one", true},
                   {"discrepancy_samples", f.samples}, {"strict_increase", f.strict}};
    return emit(o, kOk);
  }
  return emit(ojson{{"command", "flip"}, {"pair", cfg.pair}, {"verdict", "no flipping extremal ray"}}, kNegative);
}

int cmd_adjoint_a1() {
  const AdjointSequenceA1 seq = io::parse_a1(io::read_file(cfg.input));
  const SaturationVerdict sat = saturation_check_a1(seq);
  ojson o{{"command", "adjoint-check"}, {"mode", "a1"}, {"horizon", seq.horizon()}, {"q", seq.q().get_str()}};
  o["saturation"] = sat_json(sat);
  try {
    const auto res = fg_a1(seq);
    if (const auto* g = std::get_if<A1Generation>(&res)) {
      o["result"] = {{"verdict", "finitely-generated"}, {"v", g->v.get_str()}, {"u", g->u.get_str()},
                     {"generator_degree", g->generator_degree}, {"statement", g->statement}};
    } else {
      const auto& r = std::get<RationalityRefutation>(res);
      ojson x{{"verdict", "rationality-refutation"}, {"j", r.j.get_str()}};
      put(x, "frac", r.frac);
      put(x, "b", seq.b);
      o["result"] = x;
      return emit(o, kNegative);
    }
  } catch (const Error& e) {
    o["result"] = {{"verdict", to_string(e.code())}, {"message", e.what()}};
    return emit(o, kNegative);
  }
  return emit(o, sat.saturated ? kOk : kNegative);
}

// {"fan": {...}, "L": [...] | "pair": [...] with "I", "F": [...], "horizon": N, "limit": [...]?}
int cmd_adjoint_toric() {
  const auto j = io::read_file(cfg.input);
  if (!j.contains("fan") || !j.contains("horizon")) throw Error(ErrorCode::InvalidInput, "need fields fan and horizon");
  const auto file = io::parse_fan_file(j.at("fan"));
  const std::size_t n = file.fan.num_rays();
  const auto horizon = j.at("horizon").get<std::size_t>();
  CharacteristicSequence seq;
  TorusDivisor f = TorusDivisor::zero(n);
  if (j.contains("L")) {
    seq = CharacteristicSequence::from_divisor(file.fan, io::parse_divisor(j.at("L"), n), horizon);
  } else if (j.contains("pair")) {
    const ToricPair pair(file.fan, io::parse_divisor(j.at("pair"), n));
    const Int i = j.contains("I") ? Int(j.at("I").get<long>()) : Int(1);
    seq = CharacteristicSequence::from_pair(pair, i, horizon);
    f = -pair.boundary();
  } else {
    throw Error(ErrorCode::InvalidInput, "need L or pair");
  }
  if (j.contains("F")) f = io::parse_divisor(j.at("F"), n);
  std::optional<std::vector<RealNumber>> limit;
  if (j.contains("limit")) {
    limit.emplace();
    for (const auto& x : j.at("limit")) limit->push_back(io::parse_real(x));
  }

  ojson o{{"command", "adjoint-check"}, {"mode", "toric"}, {"horizon", horizon}, {"model", "single fixed fan"}};
  const auto w = fg_test_stabilization(seq, horizon);
  o["stabilization"] = w.witness ? ojson{{"verdict", "witness"}, {"i", *w.witness}}
                                 : ojson{{"verdict", "no-witness"}, {"up_to", horizon}};
  const SaturationVerdict sat = saturation_check_toric(seq, f, horizon);
  o["saturation"] = sat_json(sat);
  if (!sat.saturated) return emit(o, kNegative);
  const Fg6Verdict v = fg6_pipeline(seq, f, limit);
  if (const auto* c = std::get_if<FGCertificate>(&v)) {
    o["result"] = {{"verdict", "fg-certificate"}, {"j", c->j}, {"limit", io::to_json(c->limit)}};
    return emit(o, kOk);
  }
  if (const auto* c = std::get_if<ApproxCertificate>(&v)) {
    ojson r{{"verdict", "approximation-refutation"}, {"j", c->j.get_str()}};
    r["m"] = ojson::array();
    for (const auto& x : c->m) r["m"].push_back(x.get_str());
    r["residual"] = ojson::array();
    for (const auto& x : c->residual) r["residual"].push_back(io::to_json(x));
    o["result"] = r;
    return emit(o, kNegative);
  }
  const auto& inc = std::get<Inconclusive>(v);
  o["result"] = {{"verdict", "inconclusive"}, {"horizon", inc.horizon}, {"reason", inc.reason}};
  return emit(o, kNegative);
}

int cmd_approx(long cap) {
  const ApproxInstance inst = io::parse_instance(io::read_file(cfg.input));
  const auto res = approximate(inst, Int(cap));
  ojson o{{"command", "approx"}, {"cap", cap}};
  if (const auto* c = std::get_if<ApproxCertificate>(&res)) {
    o["verdict"] = "certificate";
    o["j"] = c->j.get_str();
    o["m"] = ojson::array();
    for (const auto& x : c->m) o["m"].push_back(x.get_str());
    o["residual"] = ojson::array();
    for (const auto& x : c->residual) o["residual"].push_back(io::to_json(x));
    if (cfg.decimal) {
      o["residual_decimal"] = ojson::array();
      for (const auto& x : c->residual) o["residual_decimal"].push_back(x.approx());
    }
    o["negative_index"] = c->negative_index;
    o["from_convergent"] = c->from_convergent;
    put(o, "eps", inst.eps);
    return emit(o, kOk);
  }
  o["verdict"] = "not-found";
  o["up_to"] = cap;
  return emit(o, kNegative);
}

// Regenerates the seeded fan corpus of the rationality-bound and MMP
// acceptance checks (same draw order) and reruns both on it.
int cmd_corpus(std::size_t surfaces, std::size_t threefolds) {
  corpus::Rng rng(cfg.corpus_seed);
  auto fans = corpus::smooth_surfaces(surfaces, rng);
  for (auto& f : corpus::smooth_threefolds(threefolds, rng)) fans.push_back(std::move(f));
  ojson o{{"command", "corpus-test"}, {"seed", cfg.corpus_seed}};
  std::size_t bound_ok = 0, mmp_ok = 0;
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < fans.size(); ++k) {
    const Fan& fan = fans[k].fan;
    const TorusDivisor delta = k % 2 ? corpus::klt_boundary(fan, rng) : TorusDivisor::zero(fan.num_rays());
    const ToricPair pair(fan, delta);
    const TorusDivisor h = corpus::ample_divisor(fan, rng);
    const Int a = pair.log_canonical().denominator();
    const NefThreshold t = nef_threshold(pair, h, a);
    const bool ok = t.v <= a * Int(static_cast<long>(fan.rank() + 1));
    if (ok) ++bound_ok;
    ojson row{{"name", fans[k].name}, {"fan", io::to_json(fan)}, {"boundary", io::to_json(delta)},
              {"H", io::to_json(h)}, {"a", a.get_str()}, {"r", t.r.str()}, {"bound_ok", ok}};
    if (fan.rank() == 2) {
      const MmpTrace m = run_mmp(ToricPair::trivial(fan));
      const bool no_flips = std::none_of(m.steps.begin(), m.steps.end(),
                                         [](const MmpStep& s) { return s.kind == ContractionKind::Flipping; });
      const bool good = no_flips && m.steps.size() <= fan.num_rays() - 2 && m.outcome != MmpOutcome::BudgetExceeded;
      if (good) ++mmp_ok;
      row["mmp_steps"] = m.steps.size();
      row["mmp_outcome"] = to_string(m.outcome);
    }
    rows.push_back(row);
  }
  o["fans"] = rows;
  o["rationality_bound_ok"] = bound_ok;
  o["surface_mmp_ok"] = mmp_ok;
  const bool pass = bound_ok == fans.size() && mmp_ok == surfaces;
  o["pass"] = pass;
  return emit(o, pass ? kOk : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric minimal model program and adjoint algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--decimal", cfg.decimal, "add decimal renderings next to exact values");
  app.add_option("--output", cfg.output, "write the report here instead of stdout");

  auto with_input = [](CLI::App* sub) { sub->add_option("--input", cfg.input, "input JSON")->required(); };

  auto* classify_cmd = app.add_subcommand("classify", "singularity class of a pair");
  with_input(classify_cmd);
  classify_cmd->add_option("--pair", cfg.pair, "boundary name");
  int depth = 6;
  classify_cmd->add_option("--dlt-depth", depth, "stellar subdivision rounds for the dlt search");

  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
  with_input(lct_cmd);
  lct_cmd->add_option("--pair", cfg.pair, "boundary name");
  std::string dname;
  lct_cmd->add_option("--D", dname, "divisor name or inline list")->required();

  auto* nef_cmd = app.add_subcommand("nef-threshold", "nef threshold of H with respect to K + Delta");
  with_input(nef_cmd);
  nef_cmd->add_option("--pair", cfg.pair, "boundary name");
  std::string hname;
  long a = 1;
  nef_cmd->add_option("--H", hname, "nef and big Cartier divisor")->required();
  nef_cmd->add_option("--a", a, "a with a(K + Delta) Cartier");

  auto* strip_cmd = app.add_subcommand("strip-verify", "polynomial vanishing on a strip");
  with_input(strip_cmd);

  auto* mmp_cmd = app.add_subcommand("mmp-run", "run the MMP");
  with_input(mmp_cmd);
  mmp_cmd->add_option("--pair", cfg.pair, "boundary name");
  std::string mode = "plain", scale, tie = "lex";
  std::size_t budget = 1000;
  mmp_cmd->add_option("--mode", mode, "plain or scaling");
  mmp_cmd->add_option("--scale-divisor", scale, "A for scaling mode");
  mmp_cmd->add_option("--budget", budget, "step cap");
  mmp_cmd->add_option("--tie-break", tie, "lex or revlex");

  auto* flip_cmd = app.add_subcommand("flip", "flip the first flipping extremal ray");
  with_input(flip_cmd);
  flip_cmd->add_option("--pair", cfg.pair, "boundary name");
  std::size_t samples = 100;
  flip_cmd->add_option("--samples", samples, "valuations sampled for discrepancy monotonicity");
  flip_cmd->add_option("--seed", cfg.seed, "sampling seed");

  auto* adj_cmd = app.add_subcommand("adjoint-check", "saturation and finite generation");
  with_input(adj_cmd);
  std::string adj_mode = "a1";
  adj_cmd->add_option("--mode", adj_mode, "a1 or toric");

  auto* approx_cmd = app.add_subcommand("approx", "approximation certificate");
  with_input(approx_cmd);
  long cap = 100000;
  approx_cmd->add_option("--cap", cap, "largest j tried");

  auto* corpus_cmd = app.add_subcommand("corpus-test", "regenerate and check the seeded corpora");
  corpus_cmd->add_option("--seed", cfg.corpus_seed, "corpus seed");
  std::size_t surfaces = 100, threefolds = 20;
  corpus_cmd->add_option("--surfaces", surfaces, "number of surfaces");
  corpus_cmd->add_option("--threefolds", threefolds, "number of 3-folds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(depth);
    if (*lct_cmd) return cmd_lct(dname);
    if (*nef_cmd) return cmd_nef_threshold(hname, a);
    if (*strip_cmd) return cmd_strip();
    if (*mmp_cmd) return cmd_mmp(mode, scale, budget, tie);
    if (*flip_cmd) return cmd_flip(samples);
    if (*adj_cmd) {
      if (adj_mode == "a1") return cmd_adjoint_a1();
      if (adj_mode == "toric") return cmd_adjoint_toric();
      throw Error(ErrorCode::InvalidInput, "mode must be a1 or toric");
    }
    if (*approx_cmd) return cmd_approx(cap);
    if (*corpus_cmd) return cmd_corpus(surfaces, threefolds);
  } catch (const Error& e) {
    const int code = is_input_error(e.code()) ? kInputError : kNegative;
    if (code == kInputError) {
      std::cerr << "error: " << e.what() << "\n";
      return code;
    }
    return emit(ojson{{"error", to_string(e.code())}, {"message", e.what()}}, code);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
