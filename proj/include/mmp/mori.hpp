#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mmp/pair.hpp"

namespace mmp {

/// A ray of NE(X) spanned by wall curves.
struct ExtremalRay {
  RatVec curve_class;               // (D_rho . C)_rho, scaled from the representative wall
  std::size_t wall = 0;             // representative: least sorted ray set among `walls`
  std::vector<std::size_t> walls;   // every wall with a proportional class
  Rat k_degree;                     // (K + Delta) . C on the representative
  bool extremal = true;
};

/// Wall classes up to positive proportionality, each flagged for
/// extremality by an exact cone-membership LP against the others.
std::vector<ExtremalRay> wall_classes(const ToricPair& pair);

/// The extremal classes only.
std::vector<ExtremalRay> mori_cone_generators(const ToricPair& pair);

/// D . C on the representative wall of the ray.
Rat degree(const Fan& fan, const ExtremalRay& ray, const TorusDivisor& d);

enum class ContractionKind { Divisorial, Flipping, Fibration };
std::string_view to_string(ContractionKind k);

struct ContractionStep {
  ContractionKind kind;
  ExtremalRay ray;
  std::vector<std::size_t> removed_rays;
  /// Unions of the maximal cones glued along walls of the ray (source ray
  /// indices); only unions of two or more cones are listed.
  std::vector<Cone> merged_cones;
  std::optional<Fan> target;  // divisorial
  std::optional<Fan> base;    // fibration
};

/// Fan surgery for a (K + Delta)-negative extremal ray.
ContractionStep contract(const ToricPair& pair, const ExtremalRay& ray);

struct FlipResult {
  ToricPair pair;
  std::vector<std::size_t> new_walls;  // walls of the flipped fan over the base
  Rat new_k_degree;                    // (K + Delta+) . C+ on the first new wall
  std::size_t samples = 0;             // valuations checked for monotonicity
  std::size_t strict = 0;              // of which strictly increased
};

/// Re-triangulates every circuit of a flipping contraction and checks the
/// defining conditions of the flip together with the monotonicity of
/// discrepancies on `samples` seeded valuations.
FlipResult flip(const ToricPair& pair, const ContractionStep& step, std::size_t samples = 100,
                std::uint64_t seed = 1);

enum class MmpMode { Plain, Scaling };
enum class TieBreak { Lex, RevLex };
enum class MmpOutcome { MinimalModel, MoriFibreSpace, BudgetExceeded };
std::string_view to_string(MmpOutcome o);

struct MmpOptions {
  MmpMode mode = MmpMode::Plain;
  std::optional<TorusDivisor> scale;  // A, scaling mode only
  std::size_t budget = 1000;
  TieBreak tie_break = TieBreak::Lex;
};

struct MmpStep {
  ToricPair before;
  ExtremalRay ray;
  Cone wall_rays;
  ContractionKind kind;
  std::optional<Rat> lambda;
  std::vector<std::size_t> removed_rays;
  std::size_t picard_before = 0;
  std::size_t picard_after = 0;
};

struct MmpTrace {
  std::vector<MmpStep> steps;
  MmpOutcome outcome;
  ToricPair result;
  std::optional<Fan> base;  // Mori fibre space base
};

MmpTrace run_mmp(const ToricPair& pair, const MmpOptions& options = {});

}  // namespace mmp
