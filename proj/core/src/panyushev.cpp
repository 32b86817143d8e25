#include "seaweed/panyushev.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace seaweed {

namespace {

using Parts = std::deque<int>;

// Reduction state with running sums of both compositions.
struct State {
  long long n;
  Parts a;
  Parts b;
  long long sum_a;
  long long sum_b;

  SeaweedSpec spec() const {
    return SeaweedSpec{Algebra::C, static_cast<int>(n),
                       Composition(std::vector<int>(a.begin(), a.end())),
                       Composition(std::vector<int>(b.begin(), b.end()))};
  }
};

long long parabolic_value(long long n, const Parts& a, long long sum_a) {
  long long halves = 0;
  for (int x : a) halves += x / 2;
  return n - sum_a + halves;
}

// Performs one reduction step, returning the rule and the index increment.
ReductionRule step(State& s, long long& increment) {
  increment = 0;
  const long long top = std::max(s.sum_a, s.sum_b);
  if (top < s.n) {
    increment = s.n - top;
    s.n = top;
    return ReductionRule::strip_k;
  }
  if (s.n == 0) return ReductionRule::empty_pair;
  if (s.b.empty()) {
    increment = parabolic_value(s.n, s.a, s.sum_a);
    return ReductionRule::parabolic;
  }
  if (s.a.empty() || s.a.front() > s.b.front()) {
    std::swap(s.a, s.b);
    std::swap(s.sum_a, s.sum_b);
    return ReductionRule::flip;
  }
  const int a1 = s.a.front();
  const int b1 = s.b.front();
  if (a1 == b1) {
    s.a.pop_front();
    s.b.pop_front();
    s.sum_a -= a1;
    s.sum_b -= b1;
    s.n -= a1;
    increment = a1;
    return ReductionRule::equal_first;
  }
  if (2 * a1 <= b1) {
    s.a.pop_front();
    s.sum_a -= a1;
    s.b.front() = a1;
    if (b1 > 2 * a1) s.b.push_front(b1 - 2 * a1);
    s.sum_b -= a1;
    s.n -= a1;
    return ReductionRule::small_a1;
  }
  s.a.front() = 2 * a1 - b1;
  s.b.front() = a1;
  s.sum_a -= b1 - a1;
  s.sum_b -= b1 - a1;
  s.n -= b1 - a1;
  return ReductionRule::large_a1;
}

bool terminal(ReductionRule rule) {
  return rule == ReductionRule::parabolic || rule == ReductionRule::empty_pair;
}

long long reduce(const SeaweedSpec& spec, std::vector<ReductionStep>* trace) {
  if (spec.algebra != Algebra::C) {
    throw std::invalid_argument("Panyushev reduction applies to type C seaweeds");
  }
  State s{spec.n, Parts(spec.a.begin(), spec.a.end()), Parts(spec.b.begin(), spec.b.end()),
          spec.a.sum(), spec.b.sum()};
  long long total = 0;
  bool last_was_flip = false;
  while (true) {
    const long long n_before = s.n;
    SeaweedSpec before;
    if (trace) before = s.spec();
    long long increment = 0;
    const ReductionRule rule = step(s, increment);
    assert(increment >= 0);
    total += increment;
    if (trace) {
      SeaweedSpec after = terminal(rule) ? before : s.spec();
      trace->push_back(ReductionStep{rule, std::move(before), std::move(after),
                                     static_cast<int>(increment)});
    }
    if (terminal(rule)) break;
    // Termination: every non-flip step shrinks n; flips never repeat.
    if (rule == ReductionRule::flip) {
      if (last_was_flip) throw std::logic_error("reduction flipped twice in a row");
      last_was_flip = true;
    } else {
      if (s.n >= n_before) throw std::logic_error("reduction failed to shrink n");
      last_was_flip = false;
    }
  }
  return total;
}

}  // namespace

std::string to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::parabolic: return "parabolic";
    case ReductionRule::empty_pair: return "empty-pair";
    case ReductionRule::equal_first: return "equal-first";
    case ReductionRule::small_a1: return "small-a1";
    case ReductionRule::large_a1: return "large-a1";
    case ReductionRule::flip: return "flip";
    case ReductionRule::strip_k: return "strip-k";
  }
  return "?";
}

int index_parabolic_c(int n, const Composition& a) {
  if (a.sum() > n) throw SpecError("parabolic formula needs sum(a) <= n");
  Parts parts(a.begin(), a.end());
  return static_cast<int>(parabolic_value(n, parts, a.sum()));
}

ReductionResult index_c(const SeaweedSpec& spec) {
  ReductionResult out;
  out.index = static_cast<int>(reduce(spec, &out.trace));
  return out;
}

int index_c_value(const SeaweedSpec& spec) { return static_cast<int>(reduce(spec, nullptr)); }

std::string render_step(const ReductionStep& step) {
  return to_string(step.rule) + ": " + render_spec(step.before) + " -> " +
         render_spec(step.after) + " [+" + std::to_string(step.increment) + "]";
}

}  // namespace seaweed
