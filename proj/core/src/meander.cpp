#include "seaweed/meander.hpp"

#include <algorithm>
#include <cassert>

#include "seaweed/disjoint_sets.hpp"

namespace seaweed {

namespace {

std::vector<int> partner_map(const Composition& c, int n) {
  std::vector<int> partner(n);
  for (int v = 1; v <= n; ++v) partner[v - 1] = v;
  int start = 0;
  for (int part : c) {
    for (int j = start + 1; j <= start + part; ++j) partner[j - 1] = 2 * start + part + 1 - j;
    start += part;
  }
  return partner;
}

std::vector<std::pair<int, int>> arcs_of(const std::vector<int>& partner) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 1; v <= static_cast<int>(partner.size()); ++v) {
    if (partner[v - 1] > v) arcs.emplace_back(v, partner[v - 1]);
  }
  return arcs;
}

}  // namespace

Meander Meander::build(const SeaweedSpec& spec) {
  Meander m;
  m.algebra_ = spec.algebra;
  m.top_ = partner_map(spec.a, spec.n);
  m.bottom_ = partner_map(spec.b, spec.n);
  m.in_tail_.assign(spec.n, 0);
  if (spec.algebra == Algebra::C) {
    // Symmetric difference of {sa+1..n} and {sb+1..n}.
    const auto lo = static_cast<int>(std::min(spec.a.sum(), spec.b.sum()));
    const auto hi = static_cast<int>(std::max(spec.a.sum(), spec.b.sum()));
    for (int v = lo + 1; v <= hi; ++v) {
      m.in_tail_[v - 1] = 1;
      m.tail_.push_back(v);
    }
  }
  return m;
}

std::vector<std::pair<int, int>> Meander::top_arcs() const { return arcs_of(top_); }
std::vector<std::pair<int, int>> Meander::bottom_arcs() const { return arcs_of(bottom_); }

std::string PermutationCycles::to_string() const {
  std::string s;
  for (const auto& cycle : cycles) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  return s;
}

PermutationCycles associated_permutation(const Meander& m) {
  const int n = m.size();
  PermutationCycles out;
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int j = start; !seen[j]; j = m.top(m.bottom(j))) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<ComponentReport> components(const Meander& m) {
  const int n = m.size();
  DisjointSets sets(n);
  for (int v = 1; v <= n; ++v) {
    sets.unite(v - 1, m.top(v) - 1);
    sets.unite(v - 1, m.bottom(v) - 1);
  }

  std::vector<int> slot(n, -1);
  std::vector<ComponentReport> out;
  std::vector<char> all_degree_two;
  for (int v = 1; v <= n; ++v) {
    const int root = sets.find(v - 1);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
      all_degree_two.push_back(1);
    }
    const int c = slot[root];
    out[c].vertices.push_back(v);
    if (m.in_tail(v)) ++out[c].tail_count;
    if (m.top(v) == v || m.bottom(v) == v) all_degree_two[c] = 0;
  }

  // Maximum degree is two, so a component is a cycle iff every vertex has
  // both a top and a bottom arc.
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto& comp = out[c];
    comp.is_cycle = all_degree_two[c] != 0;
    assert(!comp.is_cycle || comp.tail_count == 0);
    if (comp.is_cycle) {
      comp.contribution = 2;
    } else if (m.algebra() == Algebra::A) {
      comp.contribution = 1;
    } else {
      comp.contribution = comp.tail_count == 1 ? 0 : 1;
    }
  }
  return out;
}

int meander_index(const Meander& m) {
  int total = 0;
  for (const auto& comp : components(m)) total += comp.contribution;
  return m.algebra() == Algebra::A ? total - 1 : total;
}

int permutation_index(const Meander& m) {
  const auto sigma = associated_permutation(m);
  if (m.algebra() == Algebra::A) return static_cast<int>(sigma.cycles.size()) - 1;
  int count = 0;
  for (const auto& cycle : sigma.cycles) {
    const auto in_tail = std::count_if(cycle.begin(), cycle.end(),
                                       [&](int j) { return m.in_tail(j); });
    if (in_tail == 0 || in_tail == 2) ++count;
  }
  return count;
}

}  // namespace seaweed
