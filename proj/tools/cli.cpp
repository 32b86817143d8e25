#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "render.hpp"
#include "seaweed/formulas.hpp"
#include "seaweed/homotopy.hpp"

namespace seaweed::cli {

namespace {

constexpr int oracle_auto_limit = 400;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 5;
  int jobs = 1;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

bool json_output(const Globals& g) { return g.format == "json"; }

void require_not_dot(const Globals& g, const char* command) {
  if (g.format == "dot") {
    throw UsageError(std::string("--format dot is only supported by render, not ") + command);
  }
}

void emit(const Io& io, const json& doc) { io.out << doc.dump(2) << '\n'; }

// ---- index -----------------------------------------------------------------

struct MethodResult {
  std::string method;
  std::optional<int> index;
  std::optional<bool> frobenius;
  std::string rule;
  bool skipped = false;
  std::string note;
};

int oracle_dimension(const SeaweedSpec& spec) {
  const auto shape = shape_of(spec);
  return static_cast<int>(basis_of(spec, shape).size());
}

MethodResult run_method(const std::string& method, const SeaweedSpec& spec, const Globals& g,
                        bool automatic, const Meander& meander) {
  MethodResult r{method, {}, {}, {}, false, {}};
  const bool type_a = spec.algebra == Algebra::A;
  if (method == "meander") {
    r.index = meander_index(meander);
  } else if (method == "permutation") {
    r.index = permutation_index(meander);
  } else if (method == "signature") {
    if (!type_a) throw UsageError("signature moves apply to type A specs only");
    r.index = index_via_signature(spec.a, spec.b);
  } else if (method == "panyushev") {
    if (type_a) throw UsageError("the panyushev reduction applies to type C specs only");
    r.index = index_c_value(spec);
  } else if (method == "formula") {
    const auto f = formula_for(spec);
    if (!f) {
      if (!automatic) throw UsageError("no closed formula covers " + render_spec(spec));
      r.skipped = true;
      r.note = "no closed formula applies";
    } else {
      r.rule = f->rule;
      r.frobenius = f->frobenius;
      if (f->index) {
        r.index = f->index;
      } else if (f->frobenius) {
        r.index = 0;
      }
    }
  } else if (method == "oracle") {
    const int dim = oracle_dimension(spec);
    if (automatic && dim > oracle_auto_limit) {
      r.skipped = true;
      r.note = "dimension " + std::to_string(dim) + " exceeds " +
               std::to_string(oracle_auto_limit);
    } else {
      const auto result = index_oracle(spec, g.trials, g.seed);
      r.index = result.index;
      r.note = "dim " + std::to_string(result.dim) + ", " + std::to_string(result.trials) +
               " trials";
    }
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  return r;
}

bool consistent(const std::vector<MethodResult>& results) {
  std::optional<int> reference;
  for (const auto& r : results) {
    if (!r.index) continue;
    if (reference && *reference != *r.index) return false;
    reference = r.index;
  }
  if (!reference) return true;
  return std::all_of(results.begin(), results.end(), [&](const MethodResult& r) {
    return !r.frobenius || *r.frobenius == (*reference == 0);
  });
}

std::string index_text(const MethodResult& r) {
  if (r.skipped) return "-";
  if (r.index) return std::to_string(*r.index);
  return "positive";
}

int cmd_index(const Io& io, const Globals& g, const std::string& text, const std::string& method) {
  require_not_dot(g, "index");
  const auto spec = parse_spec(text);
  const auto meander = Meander::build(spec);
  std::vector<std::string> methods;
  const bool automatic = method == "all";
  if (automatic) {
    methods = {"meander", "permutation"};
    methods.push_back(spec.algebra == Algebra::A ? "signature" : "panyushev");
    methods.push_back("formula");
    methods.push_back("oracle");
  } else {
    methods = {method};
  }
  std::vector<MethodResult> results;
  for (const auto& m : methods) results.push_back(run_method(m, spec, g, automatic, meander));
  for (const auto& r : results) {
    if (r.method == "oracle" && r.skipped) io.err << "warning: oracle skipped, " << r.note << '\n';
  }
  const bool agree = consistent(results);

  if (json_output(g)) {
    json rows = json::array();
    for (const auto& r : results) {
      json row{{"method", r.method}, {"skipped", r.skipped}};
      row["index"] = r.index ? json(*r.index) : json(nullptr);
      if (r.frobenius) row["frobenius"] = *r.frobenius;
      if (!r.rule.empty()) row["rule"] = r.rule;
      if (!r.note.empty()) row["note"] = r.note;
      rows.push_back(row);
    }
    emit(io, json{{"version", schema_version},
                  {"spec", spec_json(spec)},
                  {"results", rows},
                  {"consistent", agree}});
  } else if (!automatic) {
    const auto& r = results.front();
    io.out << index_text(r);
    if (!r.rule.empty()) io.out << " (" << r.rule << ')';
    io.out << '\n';
  } else {
    io.out << "spec         " << render_spec(spec) << '\n';
    for (const auto& r : results) {
      std::string detail = r.rule;
      if (!r.note.empty()) detail += (detail.empty() ? "" : "; ") + r.note;
      io.out << std::left << std::setw(13) << r.method;
      if (detail.empty()) {
        io.out << index_text(r);
      } else {
        io.out << std::setw(9) << index_text(r) << detail;
      }
      io.out << '\n';
    }
    io.out << "consistent   " << (agree ? "yes" : "NO") << '\n';
  }
  return agree ? ok : disagreement;
}

// ---- render ----------------------------------------------------------------

int cmd_render(const Io& io, const Globals& g, const std::string& text) {
  const auto spec = parse_spec(text);
  const auto meander = Meander::build(spec);
  const auto comps = components(meander);
  if (g.format == "dot") {
    io.out << render_dot(meander, render_spec(spec));
  } else if (json_output(g)) {
    json comp_rows = json::array();
    for (const auto& c : comps) comp_rows.push_back(component_json(c));
    emit(io, json{{"version", schema_version},
                  {"spec", spec_json(spec)},
                  {"vertices", meander.size()},
                  {"top_arcs", meander.top_arcs()},
                  {"bottom_arcs", meander.bottom_arcs()},
                  {"tail", meander.tail()},
                  {"components", comp_rows},
                  {"permutation", associated_permutation(meander).to_string()}});
  } else {
    io.out << render_ascii(meander);
    const auto cycles = std::count_if(comps.begin(), comps.end(),
                                      [](const ComponentReport& c) { return c.is_cycle; });
    io.out << "components: " << comps.size() << " (" << cycles << " cycles, "
           << comps.size() - cycles << " paths)\n";
  }
  return ok;
}

// ---- reduce ----------------------------------------------------------------

int cmd_reduce(const Io& io, const Globals& g, const std::string& text) {
  require_not_dot(g, "reduce");
  const auto spec = parse_spec(text);
  if (spec.algebra == Algebra::A) {
    const auto wd = wind_down(spec.a, spec.b);
    if (json_output(g)) {
      json steps = json::array();
      for (const auto& s : wd.trace) steps.push_back(move_step_json(s));
      std::string moves;
      for (const auto& s : wd.trace) moves += to_char(s.move);
      emit(io, json{{"version", schema_version},
                    {"spec", spec_json(spec)},
                    {"kind", "signature"},
                    {"moves", moves},
                    {"steps", steps},
                    {"homotopy", wd.homotopy.canonical()},
                    {"index", wd.index}});
    } else {
      for (const auto& s : wd.trace) io.out << render_step(s) << '\n';
      io.out << "homotopy: " << wd.homotopy.canonical() << '\n';
      io.out << "index: " << wd.index << '\n';
    }
    return ok;
  }
  const auto result = index_c(spec);
  const auto& last = result.trace.back();
  if (json_output(g)) {
    json steps = json::array();
    for (const auto& s : result.trace) steps.push_back(reduction_step_json(s));
    emit(io, json{{"version", schema_version},
                  {"spec", spec_json(spec)},
                  {"kind", "panyushev"},
                  {"steps", steps},
                  {"terminal", render_spec(last.after)},
                  {"terminal_rule", to_string(last.rule)},
                  {"index", result.index}});
  } else {
    for (const auto& s : result.trace) io.out << render_step(s) << '\n';
    io.out << "terminal: " << render_spec(last.after) << " (" << to_string(last.rule) << ")\n";
    io.out << "index: " << result.index << '\n';
  }
  return ok;
}

// ---- homotopy --------------------------------------------------------------

int cmd_homotopy(const Io& io, const Globals& g, const std::string& text) {
  require_not_dot(g, "homotopy");
  const auto spec = parse_spec(text);
  if (spec.algebra != Algebra::A) throw UsageError("homotopy types are defined for type A only");
  const auto geometric = homotopy_type(Meander::build(spec));
  const auto signature = wind_down(spec.a, spec.b).homotopy;
  const bool agree = geometric == signature;
  if (json_output(g)) {
    emit(io, json{{"version", schema_version},
                  {"spec", spec_json(spec)},
                  {"homotopy", geometric.canonical()},
                  {"circles", geometric.circle_count()},
                  {"points", geometric.point_count()},
                  {"trivial", is_homotopically_trivial(geometric)},
                  {"signature_homotopy", signature.canonical()},
                  {"agrees", agree}});
  } else {
    io.out << geometric.canonical() << '\n';
    io.out << "circles: " << geometric.circle_count() << ", points: " << geometric.point_count()
           << '\n';
    if (!agree) io.out << "signature moves give " << signature.canonical() << '\n';
  }
  return agree ? ok : disagreement;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string type;
  int n = 0;
  std::string parts;
  bool no_prune = false;
  std::string csv;
};

int cmd_search(const Io& io, const Globals& g, const SearchArgs& args) {
  require_not_dot(g, "search");
  const Algebra algebra = args.type == "A" ? Algebra::A : Algebra::C;
  SearchFilter filter;
  if (!args.parts.empty()) {
    const auto comma = args.parts.find(',');
    if (comma == std::string::npos) throw UsageError("--parts expects K,L");
    try {
      filter.top_parts = std::stoi(args.parts.substr(0, comma));
      filter.bottom_parts = std::stoi(args.parts.substr(comma + 1));
    } catch (const std::exception&) {
      throw UsageError("--parts expects two integers K,L");
    }
  }
  const auto specs = frobenius_search(algebra, args.n, !args.no_prune, filter, g.jobs);
  if (!args.csv.empty()) {
    std::ofstream file(args.csv);
    if (!file) throw UsageError("cannot write " + args.csv);
    write_catalog_csv(file, specs);
  }
  if (json_output(g)) {
    json list = json::array();
    for (const auto& s : specs) list.push_back(render_spec(s));
    emit(io, json{{"version", schema_version},
                  {"algebra", args.type},
                  {"n", args.n},
                  {"prune", !args.no_prune},
                  {"top_parts", filter.top_parts ? json(*filter.top_parts) : json(nullptr)},
                  {"bottom_parts", filter.bottom_parts ? json(*filter.bottom_parts) : json(nullptr)},
                  {"count", specs.size()},
                  {"specs", list}});
  } else {
    for (const auto& s : specs) io.out << render_spec(s) << '\n';
    io.out << "count: " << specs.size() << '\n';
  }
  return ok;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  bool formulas = false;
  bool oracle = false;
  bool panyushev = false;
  int n_max = 20;
  int a_nmax = 5;
  int c_nmax = 4;
  int exhaustive_nmax = 6;
  int random = 10000;
  int random_nmax = 200;
};

void print_report(const Io& io, const SweepReport& r) {
  io.out << r.domain << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances
         << " instances, " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
  for (const auto& [label, count] : r.breakdown) io.out << "  " << label << ": " << count << '\n';
  for (const auto& m : r.mismatches) {
    io.out << "  mismatch " << render_spec(m.spec) << " [" << m.family << "]";
    for (const auto& [method, value] : m.values) io.out << ' ' << method << '=' << value;
    io.out << '\n';
  }
}

int cmd_verify(const Io& io, const Globals& g, const VerifyArgs& args) {
  require_not_dot(g, "verify");
  if (!args.formulas && !args.oracle && !args.panyushev) {
    throw UsageError("verify needs at least one of --formulas, --oracle, --panyushev");
  }
  std::vector<SweepReport> reports;
  if (args.formulas) reports.push_back(verify_formulas(args.n_max, g.jobs));
  if (args.oracle) {
    reports.push_back(verify_oracle(args.a_nmax, args.c_nmax, g.trials, g.seed, g.jobs));
  }
  if (args.panyushev) {
    reports.push_back(verify_panyushev(args.exhaustive_nmax, args.random, args.random_nmax,
                                       g.seed, g.jobs));
  }
  const bool passed = std::all_of(reports.begin(), reports.end(),
                                  [](const SweepReport& r) { return r.passed(); });
  if (json_output(g)) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(sweep_json(r));
    emit(io, json{{"version", schema_version}, {"reports", list}, {"passed", passed}});
  } else {
    for (const auto& r : reports) print_report(io, r);
  }
  return passed ? ok : disagreement;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const Io& io, const Globals& g, const std::string& text) {
  require_not_dot(g, "oracle");
  const auto spec = parse_spec(text);
  const auto result = index_oracle(spec, g.trials, g.seed);
  const bool agrees = result.index == meander_index(Meander::build(spec));
  if (json_output(g)) {
    emit(io, oracle_json(spec, result, agrees));
  } else {
    io.out << "spec: " << render_spec(spec) << '\n';
    io.out << "dim: " << result.dim << '\n';
    io.out << "trials: " << result.trials << " (seed " << result.seed << ")\n";
    io.out << "ranks:";
    for (int r : result.ranks) io.out << ' ' << r;
    io.out << '\n';
    io.out << "index: " << result.index << '\n';
    io.out << "agrees with meander: " << (agrees ? "yes" : "NO") << '\n';
  }
  return agrees ? ok : disagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index computations for seaweed subalgebras of sl(n) and sp(2n)", "seaweed"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "ascii", "json", "dot"}))
      ->transform([](std::string s) { return s == "ascii" ? std::string("text") : s; });
  app.add_option("--seed", g.seed, "Seed for randomized functionals and sampling");
  app.add_option("--trials", g.trials, "Random functionals per oracle evaluation")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps and searches")
      ->check(CLI::PositiveNumber);

  std::string spec_text;
  std::string method = "meander";
  const std::vector<std::string> methods{"meander",   "permutation", "panyushev", "signature",
                                         "formula",   "oracle",      "all"};

  auto* index = app.add_subcommand("index", "Compute the index by one or all methods");
  index->add_option("spec", spec_text, "Seaweed spec, e.g. A:4,3|2,2,1,2")->required();
  index->add_option("--method", method, "Computation method")->check(CLI::IsMember(methods));

  auto* render = app.add_subcommand("render", "Draw the meander (ascii, dot or json)");
  render->add_option("spec", spec_text)->required();

  auto* reduce = app.add_subcommand("reduce", "Show the reduction trace and terminal form");
  reduce->add_option("spec", spec_text)->required();

  auto* homotopy = app.add_subcommand("homotopy", "Homotopy type of a type A meander");
  homotopy->add_option("spec", spec_text)->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "List Frobenius seaweeds of a given size");
  search->add_option("--type", search_args.type)->required()->check(CLI::IsMember({"A", "C"}));
  search->add_option("--n", search_args.n)->required()->check(CLI::Range(1, 64));
  search->add_option("--parts", search_args.parts, "Top and bottom part counts, K,L");
  search->add_flag("--no-prune", search_args.no_prune, "Skip the necessary-condition filter");
  search->add_option("--csv", search_args.csv, "Write the catalog as CSV");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run cross-validation sweeps");
  verify->add_flag("--formulas", verify_args.formulas, "Closed formulas against meanders");
  verify->add_option("--n-max", verify_args.n_max)->check(CLI::Range(1, 200));
  verify->add_flag("--oracle", verify_args.oracle, "Matrix oracle against combinatorics");
  verify->add_option("--a-nmax", verify_args.a_nmax)->check(CLI::Range(0, 12));
  verify->add_option("--c-nmax", verify_args.c_nmax)->check(CLI::Range(0, 8));
  verify->add_flag("--panyushev", verify_args.panyushev, "Reduction against meanders");
  verify->add_option("--exhaustive-nmax", verify_args.exhaustive_nmax)->check(CLI::Range(0, 10));
  verify->add_option("--random", verify_args.random)->check(CLI::NonNegativeNumber);
  verify->add_option("--random-nmax", verify_args.random_nmax)->check(CLI::Range(1, 100000));

  auto* oracle = app.add_subcommand("oracle", "Evaluate the exact matrix oracle");
  oracle->add_option("spec", spec_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  const Io io{out, err};
  try {
    if (*index) return cmd_index(io, g, spec_text, method);
    if (*render) return cmd_render(io, g, spec_text);
    if (*reduce) return cmd_reduce(io, g, spec_text);
    if (*homotopy) return cmd_homotopy(io, g, spec_text);
    if (*search) return cmd_search(io, g, search_args);
    if (*verify) return cmd_verify(io, g, verify_args);
    if (*oracle) return cmd_oracle(io, g, spec_text);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return disagreement;
  }
  return usage;
}

}  // namespace seaweed::cli
