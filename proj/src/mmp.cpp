#include <algorithm>

#include "mmp/error.hpp"
#include "mmp/mori.hpp"

namespace mmp {

std::string_view to_string(MmpOutcome o) {
  switch (o) {
    case MmpOutcome::MinimalModel: return "minimal-model";
    case MmpOutcome::MoriFibreSpace: return "mori-fibre-space";
    case MmpOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// lambda = max over (K + Delta)-negative walls of -(K + Delta).C / A.C
Rat scaling_value(const ToricPair& pair, const TorusDivisor& a) {
  const Fan& fan = pair.fan();
  const TorusDivisor k = pair.log_canonical();
  Rat lambda(0);
  for (const Wall& w : fan.walls()) {
    const Rat kc = intersection_number(fan, k, w);
    if (kc.sign() >= 0) continue;
    const Rat ac = intersection_number(fan, a, w);
    if (ac.sign() <= 0) throw Error(ErrorCode::InvalidInput, "K + Delta + A is not nef");
    lambda = max(lambda, -kc / ac);
  }
  return lambda;
}

}  // namespace

MmpTrace run_mmp(const ToricPair& start, const MmpOptions& options) {
  if (classify(start, 0).cls == SingularityClass::NotLc) throw Error(ErrorCode::InvalidInput, "pair is not lc");
  if (!start.fan().is_complete()) throw Error(ErrorCode::InvalidFan, "the MMP needs a complete fan");
  const bool scaling = options.mode == MmpMode::Scaling;
  std::optional<TorusDivisor> a = options.scale;
  if (scaling) {
    if (!a) throw Error(ErrorCode::InvalidInput, "scaling mode needs a divisor A");
    if (a->size() != start.fan().num_rays()) throw Error(ErrorCode::DimensionMismatch, "A does not match fan");
    if (!is_nef(start.fan(), start.log_canonical() + *a)) throw Error(ErrorCode::InvalidInput, "K + Delta + A is not nef");
  }

  MmpTrace trace{{}, MmpOutcome::BudgetExceeded, start, std::nullopt};
  ToricPair pair = start;
  while (true) {
    const Fan& fan = pair.fan();
    const TorusDivisor k = pair.log_canonical();
    if (is_nef(fan, k)) {
      trace.outcome = MmpOutcome::MinimalModel;
      break;
    }
    if (trace.steps.size() >= options.budget) break;

    std::optional<Rat> lambda;
    if (scaling) lambda = scaling_value(pair, *a);
    std::vector<ExtremalRay> candidates;
    for (auto& r : mori_cone_generators(pair)) {
      if (r.k_degree.sign() >= 0) continue;
      if (lambda && (r.k_degree + *lambda * degree(fan, r, *a)).sign() != 0) continue;
      candidates.push_back(std::move(r));
    }
    if (candidates.empty()) throw Error(ErrorCode::ContractionFailed, "no negative extremal ray found");
    auto key = [&](const ExtremalRay& r) { return fan.walls()[r.wall].rays(); };
    const ExtremalRay chosen = *std::min_element(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
      return options.tie_break == TieBreak::Lex ? key(x) < key(y) : key(y) < key(x);
    });

    ContractionStep step = contract(pair, chosen);
    MmpStep rec{pair, chosen, key(chosen), step.kind, lambda, step.removed_rays, fan.picard_number(), 0};
    switch (step.kind) {
      case ContractionKind::Fibration:
        rec.picard_after = step.base->picard_number();
        trace.steps.push_back(std::move(rec));
        trace.outcome = MmpOutcome::MoriFibreSpace;
        trace.base = std::move(step.base);
        trace.result = pair;
        return trace;
      case ContractionKind::Divisorial: {
        const std::size_t e = step.removed_rays.front();
        pair = ToricPair(*step.target, pair.boundary().without(e));
        if (a) a = a->without(e);
        break;
      }
      case ContractionKind::Flipping:
        pair = flip(pair, step).pair;
        break;
    }
    rec.picard_after = pair.fan().picard_number();
    trace.steps.push_back(std::move(rec));
  }
  trace.result = pair;
  return trace;
}

}  // namespace mmp
