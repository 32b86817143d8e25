#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/homotopy.hpp"

namespace seaweed {

/// Signature moves on a type-A composition pair: flip, pure contraction,
/// block elimination, rotation contraction, component elimination.
enum class Move { F, P, B, R, C };

char to_char(Move move);

struct CompositionPair {
  Composition top;
  Composition bottom;

  friend bool operator==(const CompositionPair&, const CompositionPair&) = default;
};

struct MoveStep {
  Move move = Move::F;
  CompositionPair before;
  CompositionPair after;
  int circles = 0;  // emitted by C moves only
  int points = 0;
};

/// One deterministic winding-down step on a pair with equal positive sums:
///   a1 >  b1           F  swap the pair
///   a1 == b1           C  drop the first blocks; emit a1/2 circles, a1%2 points
///   2*a1 <= b1         P (b1 == 2*a1) or B: (a2..) | (b1-2a1, a1, b2..)
///   a1 < b1 < 2*a1     R  (2a1-b1, a2..) | (a1, b2..)
/// Zero parts are dropped. Throws std::invalid_argument on an empty pair or
/// unequal sums.
MoveStep reduce_step(const Composition& a, const Composition& b);

struct WindDown {
  std::vector<MoveStep> trace;
  HomotopyType homotopy;
  int index = 0;
};

/// Runs reduce_step to the empty pair. Each C move on a block of size k
/// contributes one top-level chain of k/2 nested circles (point at the centre
/// when k is odd); index = points + 2*circles - 1.
WindDown wind_down(const Composition& a, const Composition& b);

/// Same index as wind_down without materializing the trace; linear in n.
int index_via_signature(const Composition& a, const Composition& b);

class InapplicableMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reversed move. Only C takes a parameter: the size of the block to
/// prepend to both compositions. Reversed F, P, B and R are determined by the
/// current pair.
struct ReverseMove {
  Move move = Move::F;
  int block = 0;
};

/// Applies reversed moves to `seed` in order. The forward wind-down of the
/// result passes back through `seed`. Throws InapplicableMove.
CompositionPair wind_up(const CompositionPair& seed, std::span<const ReverseMove> moves);

/// "B: (1,9)‖(7,3) -> (9)‖(5,1,3) [+0C +0P]"
std::string render_step(const MoveStep& step);

}  // namespace seaweed
