#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

/// Restricts a search to tops/bottoms with a given number of parts.
struct SearchFilter {
  std::optional<int> top_parts;
  std::optional<int> bottom_parts;
};

/// Every seaweed of size n with index zero, in canonical spec order. Type A
/// ranges over C_n x C_n and uses the meander index; type C ranges over
/// C_{<=n} x C_{<=n} and requires the meander and Panyushev routes to agree
/// (throws std::logic_error otherwise). With `prune`, candidates failing
/// necessary_frobenius are skipped before any index computation.
std::vector<SeaweedSpec> frobenius_search(Algebra algebra, int n, bool prune,
                                          const SearchFilter& filter = {}, int jobs = 1);

struct Mismatch {
  SeaweedSpec spec;
  std::string family;
  std::vector<std::pair<std::string, long long>> values;
};

struct SweepReport {
  std::string domain;
  std::size_t instances = 0;
  std::vector<std::pair<std::string, std::size_t>> breakdown;
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;

  bool passed() const { return mismatches.empty(); }
};

/// Checks each closed formula against the meander index over its whole
/// domain with n <= n_max (n_max >= 3).
SweepReport verify_formulas(int n_max, int jobs = 1);

/// Exhaustive meander / permutation / signature / oracle agreement for type A
/// (every n <= a_nmax) and meander / permutation / Panyushev / oracle for
/// type C (every n <= c_nmax). Oracle seeds derive from `seed` and the
/// instance's position in the sweep, so reports do not depend on `jobs`.
SweepReport verify_oracle(int a_nmax, int c_nmax, int trials, std::uint64_t seed, int jobs = 1);

/// Panyushev against the meander for type C: exhaustive for n <= c_nmax, then
/// `random_count` random specs with n <= random_nmax.
SweepReport verify_panyushev(int c_nmax, int random_count, int random_nmax, std::uint64_t seed,
                             int jobs = 1);

/// Uniform random composition of n (each of the n-1 gaps cut with p = 1/2).
Composition random_composition(int n, std::mt19937_64& rng);

/// Uniform over C_n x C_n (type A) or C_{<=n} x C_{<=n} (type C).
SeaweedSpec random_spec(Algebra algebra, int n, std::mt19937_64& rng);

/// CSV with header n,a,b,index,odd_parts,tail_size.
void write_catalog_csv(std::ostream& out, std::span<const SeaweedSpec> specs);

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace seaweed
