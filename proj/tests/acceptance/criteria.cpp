#include "criteria.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "seaweed/enumeration.hpp"
#include "seaweed/exact_rank.hpp"
#include "seaweed/formulas.hpp"
#include "seaweed/homotopy.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/panyushev.hpp"
#include "seaweed/signature.hpp"

namespace acceptance {

using namespace seaweed;

void Outcome::expect(bool condition, const std::string& what) {
  if (condition) return;
  passed = false;
  if (failures.size() < 20) failures.push_back(what);
}

namespace {

constexpr std::uint64_t seed = 7;
constexpr int trials = 3;

std::string show(const SeaweedSpec& s) { return render_spec(s); }

std::string values(std::initializer_list<std::pair<const char*, long long>> list) {
  std::ostringstream out;
  for (const auto& [name, v] : list) out << ' ' << name << '=' << v;
  return out.str();
}

SeaweedSpec random_c(int n, std::mt19937_64& rng) { return random_spec(Algebra::C, n, rng); }

Outcome worked_examples() {
  Outcome o;
  const auto fig1 = parse_spec("A:4,3|2,2,1,2");
  const auto m1 = Meander::build(fig1);
  o.expect(meander_index(m1) == 2, "meander index of A:4,3|2,2,1,2");
  o.expect(permutation_index(m1) == 2, "permutation index of A:4,3|2,2,1,2");
  o.expect(index_via_signature(fig1.a, fig1.b) == 2, "signature index of A:4,3|2,2,1,2");
  o.expect(index_oracle(fig1, trials, seed).index == 2, "oracle index of A:4,3|2,2,1,2");
  o.expect(associated_permutation(m1).to_string() == "(1,3)(2,4)(5,7,6)",
           "permutation cycles of A:4,3|2,2,1,2");

  const auto fig5 = parse_spec("C[n=11]:2,1,1,6|2,2,1,2");
  const auto m5 = Meander::build(fig5);
  o.expect(associated_permutation(m5).to_string() == "(1)(2)(3,4)(5,10)(6,8,7,9)(11)",
           "permutation cycles of C[n=11]:2,1,1,6|2,2,1,2");
  o.expect(m5.tail() == std::vector<int>{8, 9, 10}, "tail of C[n=11]:2,1,1,6|2,2,1,2");
  o.expect(meander_index(m5) == 5, "index of C[n=11]:2,1,1,6|2,2,1,2");
  const std::vector<ComponentReport> table{{{1, 2}, true, 0, 2},
                                           {{3, 4}, false, 0, 1},
                                           {{5, 10}, false, 1, 0},
                                           {{6, 7, 8, 9}, false, 2, 1},
                                           {{11}, false, 0, 1}};
  o.expect(components(m5) == table, "component contribution table of C[n=11]:2,1,1,6|2,2,1,2");

  o.expect(meander_index(Meander::build(parse_spec("C[n=15]:10,5|5,8"))) == 0,
           "index of C[n=15]:10,5|5,8");
  o.expect(meander_index(Meander::build(parse_spec("C[n=15]:10,5|3,10"))) == 2,
           "index of C[n=15]:10,5|3,10");

  const auto fig8 = parse_spec("C[n=16]:7,9|13");
  const auto reduction = index_c(fig8);
  o.expect(reduction.index == 0 && meander_index(Meander::build(fig8)) == 0,
           "index of C[n=16]:7,9|13");
  const auto terminal = reduction.trace.back().after;
  const Composition ones{1, 1, 1};
  const bool parabolic_ones = terminal.n == 3 && ((terminal.a == ones && terminal.b.empty()) ||
                                                  (terminal.b == ones && terminal.a.empty()));
  o.expect(reduction.trace.back().rule == ReductionRule::parabolic && parabolic_ones,
           "C[n=16]:7,9|13 terminates at C[n=3]:1,1,1|- up to flip, got " + show(terminal));

  o.expect(homotopy_type(m1).canonical() == "C() .", "homotopy type of A:4,3|2,2,1,2");
  o.expect(shape_of(fig1).count() == 19, "star count of A:4,3|2,2,1,2");
  const auto fig2 = parse_spec("C[n=3]:2,1|1");
  const auto shape2 = shape_of(fig2);
  o.expect(shape2.count() == 14, "star count of C[n=3]:2,1|1");
  o.expect(basis_of(fig2, shape2).size() == 8, "basis dimension of C[n=3]:2,1|1");
  o.summary = "worked examples checked";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  std::size_t a_count = 0;
  const auto a_start = clock::now();
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& b : compositions_of(n)) {
        const auto spec = SeaweedSpec::type_a(a, b);
        const auto m = Meander::build(spec);
        const long long me = meander_index(m);
        const long long pe = permutation_index(m);
        const long long si = index_via_signature(a, b);
        const long long orc = index_oracle(spec, trials, seed_for_trial(seed, int(a_count))).index;
        o.expect(me == pe && pe == si && si == orc,
                 show(spec) + values({{"meander", me}, {"permutation", pe}, {"signature", si},
                                      {"oracle", orc}}));
        ++a_count;
      }
  const double a_seconds = std::chrono::duration<double>(clock::now() - a_start).count();
  o.expect(a_count == 1 + 4 + 16 + 64 + 256 + 1024, "type A instance count");
  o.expect(a_seconds < 60, "type A sweep exceeded 60 s");

  std::size_t c_count = 0;
  const auto c_start = clock::now();
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : compositions_up_to(n))
      for (const auto& b : compositions_up_to(n)) {
        const auto spec = SeaweedSpec::type_c(n, a, b);
        const auto m = Meander::build(spec);
        const long long me = meander_index(m);
        const long long pe = permutation_index(m);
        const long long py = index_c_value(spec);
        const long long orc = index_oracle(spec, trials, seed_for_trial(seed, int(c_count))).index;
        o.expect(me == pe && pe == py && py == orc,
                 show(spec) + values({{"meander", me}, {"permutation", pe}, {"panyushev", py},
                                      {"oracle", orc}}));
        ++c_count;
      }
  const double c_seconds = std::chrono::duration<double>(clock::now() - c_start).count();
  o.expect(c_count == 4 + 16 + 64 + 256, "type C instance count");
  o.expect(c_seconds < 300, "type C sweep exceeded 300 s");

  const auto p_start = clock::now();
  std::size_t p_count = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_up_to(n))
      for (const auto& b : compositions_up_to(n)) {
        const auto spec = SeaweedSpec::type_c(n, a, b);
        o.expect(index_c_value(spec) == meander_index(Meander::build(spec)), show(spec));
        ++p_count;
      }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10000; ++i) {
    const auto spec = random_c(1 + static_cast<int>(rng() % 200), rng);
    o.expect(index_c_value(spec) == meander_index(Meander::build(spec)), show(spec));
    ++p_count;
  }
  const double p_seconds = std::chrono::duration<double>(clock::now() - p_start).count();
  o.expect(p_seconds < 60, "reduction sweep exceeded 60 s");

  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << "A n<=6: " << a_count << " specs in " << a_seconds << " s; C n<=4: " << c_count
    << " specs in " << c_seconds << " s; reduction: " << p_count << " specs in " << p_seconds
    << " s";
  o.summary = s.str();
  return o;
}

Outcome formula_verification() {
  Outcome o;
  const auto report = verify_formulas(60);
  for (const auto& m : report.mismatches) {
    std::string detail = show(m.spec) + " [" + m.family + "]";
    for (const auto& [k, v] : m.values) detail += " " + k + "=" + std::to_string(v);
    o.expect(false, detail);
  }
  for (const char* family : {"elashvili", "a-three-over-one", "a-two-over-two", "c-singletons",
                             "c-ab-c", "c-ab-c-frobenius", "c-n-ab", "c-n-ab-frobenius"}) {
    bool present = false;
    for (const auto& [label, count] : report.breakdown) present |= label == family && count > 0;
    o.expect(present, std::string("family not exercised: ") + family);
  }
  o.summary = std::to_string(report.instances) + " formula instances, " +
              std::to_string(report.mismatches.size()) + " mismatches";
  return o;
}

Outcome necessary_condition() {
  Outcome o;
  std::size_t zero = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& b : compositions_of(n)) {
        const auto spec = SeaweedSpec::type_a(a, b);
        if (meander_index(Meander::build(spec)) != 0) continue;
        ++zero;
        o.expect(necessary_frobenius(spec), "index 0 but predicate false: " + show(spec));
      }
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_up_to(n))
      for (const auto& b : compositions_up_to(n)) {
        const auto spec = SeaweedSpec::type_c(n, a, b);
        if (meander_index(Meander::build(spec)) != 0) continue;
        ++zero;
        o.expect(necessary_frobenius(spec), "index 0 but predicate false: " + show(spec));
      }
  const auto witness = parse_spec("C[n=15]:10,5|3,10");
  o.expect(necessary_frobenius(witness), "witness fails the predicate");
  o.expect(meander_index(Meander::build(witness)) > 0, "witness has index 0");
  o.summary = std::to_string(zero) + " Frobenius specs satisfy the predicate; witness " +
              show(witness) + " has index " +
              std::to_string(meander_index(Meander::build(witness)));
  return o;
}

bool arcs_nest(const std::vector<std::pair<int, int>>& arcs) {
  for (const auto& [j, k] : arcs)
    for (const auto& [j2, k2] : arcs)
      if (j < j2 && j2 < k && k < k2) return false;
  return true;
}

bool involution(const Meander& m, bool top) {
  for (int v = 1; v <= m.size(); ++v) {
    const int w = top ? m.top(v) : m.bottom(v);
    if (w < 1 || w > m.size() || (top ? m.top(w) : m.bottom(w)) != v) return false;
  }
  return true;
}

void structural_meander(Outcome& o, const SeaweedSpec& spec) {
  const auto m = Meander::build(spec);
  o.expect(arcs_nest(m.top_arcs()) && arcs_nest(m.bottom_arcs()), "arcs cross: " + show(spec));
  o.expect(involution(m, true) && involution(m, false), "partner map not involutive: " + show(spec));
  for (const auto& c : components(m)) {
    if (c.is_cycle) o.expect(c.tail_count == 0, "cycle meets the tail: " + show(spec));
  }
}

void structural_form(Outcome& o, const SeaweedSpec& spec, std::uint64_t s) {
  const auto shape = shape_of(spec);
  if (spec.algebra == Algebra::C) {
    o.expect(shape.anti_transpose_symmetric(), "shape not anti-transpose symmetric: " + show(spec));
  }
  const auto basis = basis_of(spec, shape);
  IntMatrix m;
  try {
    m = kirillov_matrix(shape, basis, Functional::random(basis.size(), s));
  } catch (const BracketClosureError& e) {
    o.expect(false, "bracket not closed: " + show(spec) + ": " + e.what());
    return;
  }
  o.expect(m.is_antisymmetric(), "form not antisymmetric: " + show(spec));
  o.expect(exact_rank(m) % 2 == 0, "odd rank: " + show(spec));
}

Outcome structural_properties() {
  Outcome o;
  std::size_t instances = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& b : compositions_of(n)) {
        const auto spec = SeaweedSpec::type_a(a, b);
        structural_meander(o, spec);
        structural_form(o, spec, seed + instances);
        ++instances;
      }
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : compositions_up_to(n))
      for (const auto& b : compositions_up_to(n)) {
        const auto spec = SeaweedSpec::type_c(n, a, b);
        structural_meander(o, spec);
        structural_form(o, spec, seed + instances);
        ++instances;
      }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 150);
    structural_meander(o, random_spec(Algebra::A, n, rng));
    const auto spec = random_c(n, rng);
    structural_meander(o, spec);
    o.expect(index_c_value(spec) == index_c_value(SeaweedSpec::type_c(n, spec.b, spec.a)),
             "flip symmetry: " + show(spec));
    const long long top = std::max(spec.a.sum(), spec.b.sum());
    if (top > 0 && top < n) {
      const auto inner = SeaweedSpec::type_c(static_cast<int>(top), spec.a, spec.b);
      o.expect(index_c_value(spec) == (n - top) + index_c_value(inner), "strip-k: " + show(spec));
      o.expect(meander_index(Meander::build(spec)) ==
                   (n - top) + meander_index(Meander::build(inner)),
               "strip-k on meanders: " + show(spec));
    }
    instances += 2;
  }
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    structural_form(o, random_c(n, rng), seed + i);
    structural_form(o, random_spec(Algebra::A, n, rng), seed + i);
  }
  o.summary = std::to_string(instances) + " generated instances plus 80 random forms";
  return o;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "worked-example regression", 1.0, worked_examples},
      {2, "oracle equivalence", 6 * 60.0, oracle_equivalence},
      {3, "closed formula verification n<=60", 120.0, formula_verification},
      {4, "necessary-condition soundness", 60.0, necessary_condition},
      {5, "structural property suite", 120.0, structural_properties},
  };
  return list;
}

Outcome evaluate(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.passed = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.seconds > c.budget_seconds) {
    o.passed = false;
    o.failures.push_back("time budget exceeded");
  }
  return o;
}

}  // namespace acceptance
