#include "seaweed/composition.hpp"

#include <charconv>
#include <numeric>

namespace seaweed {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw SpecError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

void append_compositions(int remaining, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    append_compositions(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

void append_with_parts(int remaining, int parts, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
  if (parts == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining - (parts - 1); ++first) {
    prefix.push_back(first);
    append_with_parts(remaining - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw SpecError("composition parts must be positive, got " + std::to_string(p));
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

std::string Composition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

char to_char(Algebra algebra) { return algebra == Algebra::A ? 'A' : 'C'; }

SeaweedSpec SeaweedSpec::make(Algebra algebra, int n, Composition a, Composition b) {
  if (n < 1) throw SpecError("size n must be positive, got " + std::to_string(n));
  if (algebra == Algebra::A) {
    if (a.sum() != n || b.sum() != n) {
      throw SpecError("type A compositions must both sum to n=" + std::to_string(n) +
                      " (got " + std::to_string(a.sum()) + " and " +
                      std::to_string(b.sum()) + ")");
    }
  } else if (a.sum() > n || b.sum() > n) {
    throw SpecError("type C compositions must sum to at most n=" + std::to_string(n));
  }
  return SeaweedSpec{algebra, n, std::move(a), std::move(b)};
}

SeaweedSpec SeaweedSpec::type_a(Composition a, Composition b) {
  const auto n = static_cast<int>(a.sum());
  return make(Algebra::A, n, std::move(a), std::move(b));
}

SeaweedSpec SeaweedSpec::type_c(int n, Composition a, Composition b) {
  return make(Algebra::C, n, std::move(a), std::move(b));
}

Composition parse_composition(std::string_view text) {
  text = trim(text);
  if (text == "-") return Composition{};
  if (text.empty()) throw SpecError("empty composition token (use '-' for the empty composition)");
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    int part = parse_int(text.substr(0, comma), "part");
    if (part < 1) throw SpecError("composition parts must be positive, got " + std::to_string(part));
    parts.push_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

SeaweedSpec parse_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw SpecError("empty seaweed spec");
  Algebra algebra;
  if (text.front() == 'A') {
    algebra = Algebra::A;
  } else if (text.front() == 'C') {
    algebra = Algebra::C;
  } else {
    throw SpecError("spec must start with type tag 'A' or 'C'");
  }
  text.remove_prefix(1);
  text = trim(text);

  int n = 0;
  bool has_size = false;
  if (!text.empty() && text.front() == '[') {
    auto close = text.find(']');
    if (close == std::string_view::npos) throw SpecError("unterminated size clause");
    auto clause = trim(text.substr(1, close - 1));
    if (clause.substr(0, 2) != "n=") throw SpecError("size clause must read [n=INT]");
    n = parse_int(clause.substr(2), "size");
    has_size = true;
    text.remove_prefix(close + 1);
    text = trim(text);
  }
  if (text.empty() || text.front() != ':') throw SpecError("expected ':' after type tag");
  text.remove_prefix(1);

  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw SpecError("expected '|' between compositions");
  if (text.find('|', bar + 1) != std::string_view::npos) throw SpecError("more than one '|'");
  Composition a = parse_composition(text.substr(0, bar));
  Composition b = parse_composition(text.substr(bar + 1));

  if (algebra == Algebra::C) {
    if (!has_size) throw SpecError("type C spec requires a size clause [n=INT]");
    return SeaweedSpec::make(algebra, n, std::move(a), std::move(b));
  }
  if (!has_size) n = static_cast<int>(a.sum());
  return SeaweedSpec::make(algebra, n, std::move(a), std::move(b));
}

std::string render_spec(const SeaweedSpec& spec) {
  std::string s(1, to_char(spec.algebra));
  if (spec.algebra == Algebra::C) s += "[n=" + std::to_string(spec.n) + "]";
  s += ':' + spec.a.to_string() + '|' + spec.b.to_string();
  return s;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  out.reserve(std::size_t{1} << (n - 1));
  std::vector<int> prefix;
  append_compositions(n, prefix, out);
  return out;
}

std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out{Composition{}};
  for (int m = 1; m <= n; ++m) {
    auto level = compositions_of(m);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

std::vector<Composition> compositions_with_parts(int total, int parts) {
  std::vector<Composition> out;
  if (parts < 0 || total < 0) return out;
  std::vector<int> prefix;
  append_with_parts(total, parts, prefix, out);
  return out;
}

int odd_part_count(const Composition& a, const Composition& b) {
  int count = 0;
  for (int p : a) count += p % 2;
  for (int p : b) count += p % 2;
  return count;
}

}  // namespace seaweed
