#include "seaweed/signature.hpp"

#include <deque>
#include <utility>

namespace seaweed {

namespace {

using Parts = std::deque<int>;

Parts to_parts(const Composition& c) { return Parts(c.begin(), c.end()); }

Composition to_composition(const Parts& parts) {
  return Composition(std::vector<int>(parts.begin(), parts.end()));
}

struct Emitted {
  int circles = 0;
  int points = 0;
};

// Mutates the pair in place; `a` and `b` are non-empty with equal sums.
Move step_in_place(Parts& a, Parts& b, Emitted& emitted) {
  const int a1 = a.front();
  const int b1 = b.front();
  if (a1 > b1) {
    std::swap(a, b);
    return Move::F;
  }
  if (a1 == b1) {
    a.pop_front();
    b.pop_front();
    emitted = Emitted{a1 / 2, a1 % 2};
    return Move::C;
  }
  if (2 * a1 <= b1) {
    a.pop_front();
    b.pop_front();
    b.push_front(a1);
    if (b1 > 2 * a1) b.push_front(b1 - 2 * a1);
    return b1 == 2 * a1 ? Move::P : Move::B;
  }
  a.front() = 2 * a1 - b1;
  b.front() = a1;
  return Move::R;
}

void check_pair(const Composition& a, const Composition& b) {
  if (a.sum() != b.sum()) {
    throw std::invalid_argument("signature moves need compositions with equal sums");
  }
}

std::string pair_text(const CompositionPair& p) {
  auto part = [](const Composition& c) {
    return c.empty() ? std::string("()") : "(" + c.to_string() + ")";
  };
  return part(p.top) + "‖" + part(p.bottom);
}

}  // namespace

char to_char(Move move) {
  switch (move) {
    case Move::F: return 'F';
    case Move::P: return 'P';
    case Move::B: return 'B';
    case Move::R: return 'R';
    case Move::C: return 'C';
  }
  return '?';
}

MoveStep reduce_step(const Composition& a, const Composition& b) {
  check_pair(a, b);
  if (a.empty()) throw std::invalid_argument("pair is already terminal");
  Parts top = to_parts(a);
  Parts bottom = to_parts(b);
  Emitted emitted;
  const Move move = step_in_place(top, bottom, emitted);
  return MoveStep{move, {a, b}, {to_composition(top), to_composition(bottom)},
                  emitted.circles, emitted.points};
}

WindDown wind_down(const Composition& a, const Composition& b) {
  check_pair(a, b);
  WindDown out;
  Parts top = to_parts(a);
  Parts bottom = to_parts(b);
  std::vector<HomotopyNode> chains;
  int circles = 0;
  int points = 0;
  CompositionPair current{a, b};
  while (!top.empty()) {
    Emitted emitted;
    const Move move = step_in_place(top, bottom, emitted);
    CompositionPair next{to_composition(top), to_composition(bottom)};
    out.trace.push_back(MoveStep{move, current, next, emitted.circles, emitted.points});
    current = std::move(next);
    if (move == Move::C) {
      chains.push_back(HomotopyType::chain(emitted.circles, emitted.points != 0));
      circles += emitted.circles;
      points += emitted.points;
    }
  }
  out.homotopy = HomotopyType(std::move(chains));
  out.index = points + 2 * circles - 1;
  return out;
}

int index_via_signature(const Composition& a, const Composition& b) {
  check_pair(a, b);
  Parts top = to_parts(a);
  Parts bottom = to_parts(b);
  long long total = 0;
  while (!top.empty()) {
    Emitted emitted;
    if (step_in_place(top, bottom, emitted) == Move::C) {
      total += emitted.points + 2LL * emitted.circles;
    }
  }
  return static_cast<int>(total - 1);
}

CompositionPair wind_up(const CompositionPair& seed, std::span<const ReverseMove> moves) {
  check_pair(seed.top, seed.bottom);
  Parts a = to_parts(seed.top);
  Parts b = to_parts(seed.bottom);
  for (const auto& rm : moves) {
    switch (rm.move) {
      case Move::F:
        // Forward F only fires when the first top part is larger.
        if (a.empty() || b.front() <= a.front()) {
          throw InapplicableMove("reverse F needs a pair whose bottom first part is larger");
        }
        std::swap(a, b);
        break;
      case Move::C:
        if (rm.block < 1) throw InapplicableMove("reverse C needs a positive block size");
        a.push_front(rm.block);
        b.push_front(rm.block);
        break;
      case Move::P: {
        if (b.empty()) throw InapplicableMove("reverse P needs a non-empty bottom");
        const int x = b.front();
        a.push_front(x);
        b.front() = 2 * x;
        break;
      }
      case Move::B: {
        if (b.size() < 2) throw InapplicableMove("reverse B needs two bottom parts");
        const int c = b[0];
        const int x = b[1];
        b.pop_front();
        b.front() = c + 2 * x;
        a.push_front(x);
        break;
      }
      case Move::R: {
        if (a.empty() || b.empty() || a.front() >= b.front()) {
          throw InapplicableMove("reverse R needs a1 < b1");
        }
        const int d = a.front();
        const int x = b.front();
        a.front() = x;
        b.front() = 2 * x - d;
        break;
      }
    }
  }
  return CompositionPair{to_composition(a), to_composition(b)};
}

std::string render_step(const MoveStep& step) {
  return std::string(1, to_char(step.move)) + ": " + pair_text(step.before) + " -> " +
         pair_text(step.after) + " [+" + std::to_string(step.circles) + "C +" +
         std::to_string(step.points) + "P]";
}

}  // namespace seaweed
