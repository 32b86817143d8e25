#include "seaweed/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "seaweed/formulas.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/panyushev.hpp"
#include "seaweed/signature.hpp"

namespace seaweed {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Composition> candidates(Algebra algebra, int n, std::optional<int> parts) {
  if (algebra == Algebra::A) {
    return parts ? compositions_with_parts(n, *parts) : compositions_of(n);
  }
  if (!parts) return compositions_up_to(n);
  std::vector<Composition> out;
  for (int m = 0; m <= n; ++m) {
    auto level = compositions_with_parts(m, *parts);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int meander_value(const SeaweedSpec& spec) { return meander_index(Meander::build(spec)); }

// One unit of sweep work: its mismatches land in its own slot.
using Task = std::function<void(std::vector<Mismatch>&)>;

std::vector<Mismatch> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Mismatch>> slots(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { tasks[i](slots[i]); });
  std::vector<Mismatch> merged;
  for (auto& slot : slots) {
    merged.insert(merged.end(), std::make_move_iterator(slot.begin()),
                  std::make_move_iterator(slot.end()));
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Mismatch& x, const Mismatch& y) { return x.spec < y.spec; });
  return merged;
}

void compare(std::vector<Mismatch>& out, const SeaweedSpec& spec, const std::string& family,
             std::vector<std::pair<std::string, long long>> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].second != values[0].second) {
      out.push_back(Mismatch{spec, family, std::move(values)});
      return;
    }
  }
}

SeaweedSpec spec_a(std::vector<int> a, std::vector<int> b) {
  return SeaweedSpec::type_a(Composition(std::move(a)), Composition(std::move(b)));
}

SeaweedSpec spec_c(int n, std::vector<int> a, std::vector<int> b) {
  return SeaweedSpec::type_c(n, Composition(std::move(a)), Composition(std::move(b)));
}

}  // namespace

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count && !failed; i = next++) body(i);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::jthread> threads;
  for (std::size_t t = 0; t < std::min(workers, count); ++t) threads.emplace_back(worker);
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<SeaweedSpec> frobenius_search(Algebra algebra, int n, bool prune,
                                          const SearchFilter& filter, int jobs) {
  if (n < 1) throw std::invalid_argument("search size must be positive");
  const auto tops = candidates(algebra, n, filter.top_parts);
  const auto bottoms = candidates(algebra, n, filter.bottom_parts);
  std::vector<std::vector<SeaweedSpec>> found(tops.size());
  parallel_for(tops.size(), jobs, [&](std::size_t i) {
    for (const auto& b : bottoms) {
      SeaweedSpec spec{algebra, n, tops[i], b};
      if (prune && !necessary_frobenius(spec)) continue;
      const int by_meander = meander_value(spec);
      if (algebra == Algebra::C) {
        const int by_reduction = index_c_value(spec);
        if (by_reduction != by_meander) {
          throw std::logic_error("meander and Panyushev disagree on " + render_spec(spec));
        }
      }
      if (by_meander == 0) found[i].push_back(std::move(spec));
    }
  });
  std::vector<SeaweedSpec> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

SweepReport verify_formulas(int n_max, int jobs) {
  if (n_max < 3) throw std::invalid_argument("verify_formulas needs n_max >= 3");
  const auto start = Clock::now();
  SweepReport report;
  report.domain = "formulas n<=" + std::to_string(n_max);

  // Instance counts are known up front; tasks are one (family, n) slice each.
  std::vector<Task> tasks;
  std::vector<std::pair<std::string, std::size_t>> counts;
  auto family = [&](const std::string& name, std::size_t count, auto&& make_task) {
    counts.emplace_back(name, count);
    for (int n = 1; n <= n_max; ++n) tasks.push_back(make_task(n));
  };

  std::size_t c_elash = 0, c_three = 0, c_twotwo = 0, c_single = 0, c_abc = 0, c_abc_f = 0,
              c_nab = 0, c_nab_f = 0;
  for (int n = 1; n <= n_max; ++n) {
    c_elash += n >= 2 ? n - 1 : 0;
    c_three += n >= 3 ? (n - 1) * (n - 2) / 2 : 0;
    c_twotwo += n >= 2 ? (n - 1) * (n - 1) : 0;
    c_single += static_cast<std::size_t>(n) * n;
    for (int a = 1; a < n; ++a) {
      c_abc += (n - 1 >= 1) + (n - 2 >= 1);
      c_abc_f += n;
    }
    for (int s = 2; s <= n; ++s) {
      const std::size_t pairs = s - 1;
      if (s == n - 1 || s == n - 2) c_nab += pairs;
      c_nab_f += pairs;
    }
  }

  family("elashvili", c_elash, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        auto spec = spec_a({a, n - a}, {n});
        compare(out, spec, "elashvili",
                {{"formula", index_elashvili(a, n - a)}, {"meander", meander_value(spec)}});
      }
    };
  });
  family("a-three-over-one", c_three, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b < n; ++b) {
          const int c = n - a - b;
          auto spec = spec_a({a, b, c}, {n});
          const int parts[] = {a, b, c};
          compare(out, spec, "a-three-over-one",
                  {{"formula", index_a_small(SmallShapeA::three_over_one, parts)},
                   {"meander", meander_value(spec)}});
        }
      }
    };
  });
  family("a-two-over-two", c_twotwo, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        for (int c = 1; c < n; ++c) {
          auto spec = spec_a({a, n - a}, {c, n - c});
          const int parts[] = {a, n - a, c, n - c};
          compare(out, spec, "a-two-over-two",
                  {{"formula", index_a_small(SmallShapeA::two_over_two, parts)},
                   {"meander", meander_value(spec)}});
        }
      }
    };
  });
  family("c-singletons", c_single, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          auto spec = spec_c(n, {a}, {b});
          compare(out, spec, "c-singletons",
                  {{"formula", index_c_singletons(n, a, b)}, {"meander", meander_value(spec)}});
        }
      }
    };
  });
  family("c-ab-c", c_abc, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        for (int c : {n - 1, n - 2}) {
          if (c < 1) continue;
          auto spec = spec_c(n, {a, n - a}, {c});
          compare(out, spec, "c-ab-c",
                  {{"formula", index_c_ab_c(n, a, n - a, c)}, {"meander", meander_value(spec)}});
        }
      }
    };
  });
  family("c-ab-c-frobenius", c_abc_f, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        for (int c = 1; c <= n; ++c) {
          auto spec = spec_c(n, {a, n - a}, {c});
          const bool frob = is_frobenius_c_ab_c(n, a, n - a, c);
          const bool zero = meander_value(spec) == 0;
          compare(out, spec, "c-ab-c-frobenius",
                  {{"formula_frobenius", frob}, {"meander_frobenius", zero}});
        }
      }
    };
  });
  family("c-n-ab", c_nab, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int s : {n - 1, n - 2}) {
        for (int a = 1; a < s; ++a) {
          auto spec = spec_c(n, {n}, {a, s - a});
          compare(out, spec, "c-n-ab",
                  {{"formula", index_c_n_ab(n, a, s - a)}, {"meander", meander_value(spec)}});
        }
      }
    };
  });
  family("c-n-ab-frobenius", c_nab_f, [](int n) -> Task {
    return [n](std::vector<Mismatch>& out) {
      for (int a = 1; a < n; ++a) {
        for (int b = 1; a + b <= n; ++b) {
          auto spec = spec_c(n, {n}, {a, b});
          const bool frob = is_frobenius_c_n_ab(n, a, b);
          const bool zero = meander_value(spec) == 0;
          compare(out, spec, "c-n-ab-frobenius",
                  {{"formula_frobenius", frob}, {"meander_frobenius", zero}});
        }
      }
    };
  });

  report.mismatches = run_tasks(tasks, jobs);
  report.breakdown = std::move(counts);
  for (const auto& [name, count] : report.breakdown) report.instances += count;
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

SweepReport verify_oracle(int a_nmax, int c_nmax, int trials, std::uint64_t seed, int jobs) {
  const auto start = Clock::now();
  SweepReport report;
  report.domain = "oracle A n<=" + std::to_string(a_nmax) + ", C n<=" + std::to_string(c_nmax);
  report.seed = seed;

  std::vector<SeaweedSpec> specs;
  auto add_level = [&](Algebra algebra, int n, const std::vector<Composition>& comps) {
    for (const auto& a : comps) {
      for (const auto& b : comps) specs.push_back(SeaweedSpec{algebra, n, a, b});
    }
    report.breakdown.emplace_back(std::string(1, to_char(algebra)) + " n=" + std::to_string(n),
                                  comps.size() * comps.size());
  };
  for (int n = 1; n <= a_nmax; ++n) add_level(Algebra::A, n, compositions_of(n));
  for (int n = 1; n <= c_nmax; ++n) add_level(Algebra::C, n, compositions_up_to(n));

  std::vector<std::vector<Mismatch>> slots(specs.size());
  parallel_for(specs.size(), jobs, [&](std::size_t i) {
    const auto& spec = specs[i];
    const auto m = Meander::build(spec);
    std::vector<std::pair<std::string, long long>> values{
        {"meander", meander_index(m)}, {"permutation", permutation_index(m)}};
    if (spec.algebra == Algebra::A) {
      values.emplace_back("signature", index_via_signature(spec.a, spec.b));
    } else {
      values.emplace_back("panyushev", index_c_value(spec));
    }
    values.emplace_back("oracle", index_oracle(spec, trials, seed_for_trial(seed, static_cast<int>(i))).index);
    compare(slots[i], spec, "oracle", std::move(values));
  });
  for (auto& slot : slots) {
    report.mismatches.insert(report.mismatches.end(), slot.begin(), slot.end());
  }
  report.instances = specs.size();
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

SweepReport verify_panyushev(int c_nmax, int random_count, int random_nmax, std::uint64_t seed,
                             int jobs) {
  const auto start = Clock::now();
  SweepReport report;
  report.domain = "panyushev C n<=" + std::to_string(c_nmax) + " + " +
                  std::to_string(random_count) + " random n<=" + std::to_string(random_nmax);
  report.seed = seed;

  std::vector<SeaweedSpec> specs;
  for (int n = 1; n <= c_nmax; ++n) {
    const auto comps = compositions_up_to(n);
    for (const auto& a : comps) {
      for (const auto& b : comps) specs.push_back(SeaweedSpec{Algebra::C, n, a, b});
    }
    report.breakdown.emplace_back("C n=" + std::to_string(n), comps.size() * comps.size());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, std::max(1, random_nmax));
  for (int i = 0; i < random_count; ++i) specs.push_back(random_spec(Algebra::C, size(rng), rng));
  report.breakdown.emplace_back("C random", static_cast<std::size_t>(random_count));

  std::vector<std::vector<Mismatch>> slots(specs.size());
  parallel_for(specs.size(), jobs, [&](std::size_t i) {
    compare(slots[i], specs[i], "panyushev",
            {{"meander", meander_value(specs[i])}, {"panyushev", index_c_value(specs[i])}});
  });
  for (auto& slot : slots) {
    report.mismatches.insert(report.mismatches.end(), slot.begin(), slot.end());
  }
  report.instances = specs.size();
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

Composition random_composition(int n, std::mt19937_64& rng) {
  std::vector<int> parts;
  if (n <= 0) return Composition{};
  std::bernoulli_distribution cut(0.5);
  int run = 1;
  for (int gap = 1; gap < n; ++gap) {
    if (cut(rng)) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

SeaweedSpec random_spec(Algebra algebra, int n, std::mt19937_64& rng) {
  if (algebra == Algebra::A) {
    auto a = random_composition(n, rng);
    auto b = random_composition(n, rng);
    return SeaweedSpec{algebra, n, std::move(a), std::move(b)};
  }
  // |C_m| = 2^(m-1) for m >= 1 and 1 for m = 0, so P(sum = m) is proportional.
  std::vector<double> weights(n + 1);
  weights[0] = 1;
  for (int m = 1; m <= n; ++m) weights[m] = std::ldexp(1.0, m - 1);
  std::discrete_distribution<int> sum(weights.begin(), weights.end());
  auto a = random_composition(sum(rng), rng);
  auto b = random_composition(sum(rng), rng);
  return SeaweedSpec{algebra, n, std::move(a), std::move(b)};
}

void write_catalog_csv(std::ostream& out, std::span<const SeaweedSpec> specs) {
  out << "n,a,b,index,odd_parts,tail_size\n";
  for (const auto& spec : specs) {
    const auto m = Meander::build(spec);
    out << spec.n << ",\"" << spec.a.to_string() << "\",\"" << spec.b.to_string() << "\","
        << meander_index(m) << ',' << odd_part_count(spec.a, spec.b) << ',' << m.tail().size()
        << '\n';
  }
}

}  // namespace seaweed
