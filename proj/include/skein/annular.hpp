#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skein/braid.hpp"
#include "skein/skein_vector.hpp"

namespace skein {

enum class TileKind : std::uint8_t { Identity, CapCup, AxisPass };

struct Tile {
  TileKind kind = TileKind::Identity;
  int index = 0;  // capcup position i (strands i, i+1)
  int sign = 1;   // axis-pass sign
  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Which smoothing of a positive crossing carries weight A.
enum class Smoothing {
  Standard,  // A: identity tile, A^-1: capcup
  Mirrored,  // A^-1: identity tile, A: capcup
};

struct SmoothingState {
  LaurentPoly weight{Var::A};
  int strands = 1;
  std::vector<Tile> tiles;
};

struct TerminalState {
  int contractible_loops = 0;
  std::vector<int> windings;  // descending; negative entries are mirror-chirality windings
  friend auto operator<=>(const TerminalState&, const TerminalState&) = default;
};

struct StateCapExceeded : std::runtime_error {
  int crossings;
  int cap;
  StateCapExceeded(int c, int k);
};

struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultStateCap = 24;
constexpr int kExactCap = 22;

// Mirrored is the convention whose chirality matches the product rule of B_ST (and the
// default substitution u = A^2); Standard is kept for convention-sensitivity runs.
constexpr Smoothing kDefaultSmoothing = Smoothing::Mirrored;

std::vector<SmoothingState> smooth_states(const MixedBraidWord& w, int cap = kDefaultStateCap,
                                          Smoothing conv = kDefaultSmoothing);

/// Winding classification. Throws OutOfDomain when a component carries passes of both signs.
TerminalState trace_components(const SmoothingState& s);

SkeinVector merge_windings(const TerminalState& ts);

/// Bracket of one crossingless state (weight included), drawn on the annulus swept around the
/// axis: each axis pass becomes an essential circle passing under the other 2n-1 lines at its
/// height. Independent of the winding classification; `cap` bounds those extra crossings.
SkeinVector evaluate_state_exact(const SmoothingState& s, Smoothing conv = kDefaultSmoothing,
                                 int cap = kExactCap);

struct EvalOptions {
  int cap = kDefaultStateCap;
  Smoothing smoothing = kDefaultSmoothing;
  unsigned threads = 0;  // 0: hardware concurrency
  int exact_cap = kExactCap;
  bool force_exact = false;  // evaluate every state exactly (cross-check mode)
};

SkeinVector evaluate_closure(const MixedBraidWord& w, const EvalOptions& opts = {});

}  // namespace skein
