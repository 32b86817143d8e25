#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seaweed {

/// Thrown for malformed seaweed notation or a spec whose sums violate the
/// constraints of its algebra type.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered sequence of positive integers. The empty composition is valid
/// and is written "-" in text notation.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  long long sum() const { return sum_; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// "4,3" or "-" for the empty composition.
  std::string to_string() const;

  // Lexicographic on parts; the cached sum is a function of the parts.
  friend bool operator==(const Composition& x, const Composition& y) {
    return x.parts_ == y.parts_;
  }
  friend auto operator<=>(const Composition& x, const Composition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  long long sum_ = 0;
};

enum class Algebra { A, C };

char to_char(Algebra algebra);

/// A seaweed subalgebra of sl(n) (type A) or sp(2n) (type C), given by the
/// pair of compositions a (lower blocks, top meander arcs) and b (upper
/// blocks, bottom meander arcs).
struct SeaweedSpec {
  Algebra algebra = Algebra::A;
  int n = 0;
  Composition a;
  Composition b;

  /// Validating constructor: type A needs sum(a) = sum(b) = n, type C needs
  /// both sums at most n. Throws SpecError.
  static SeaweedSpec make(Algebra algebra, int n, Composition a, Composition b);
  static SeaweedSpec type_a(Composition a, Composition b);
  static SeaweedSpec type_c(int n, Composition a, Composition b);

  friend bool operator==(const SeaweedSpec&, const SeaweedSpec&) = default;
  friend auto operator<=>(const SeaweedSpec& x, const SeaweedSpec& y) {
    if (auto c = x.algebra <=> y.algebra; c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
};

/// Parses the text notation
///
///   spec    := tag sizeopt ":" comp "|" comp
///   tag     := "A" | "C"
///   sizeopt := "[n=" INT "]"        (required for C, optional for A)
///   comp    := "-" | INT ("," INT)*
///
/// Whitespace around tokens is ignored. Throws SpecError.
SeaweedSpec parse_spec(std::string_view text);

/// Canonical printer; parse_spec(render_spec(s)) == s. Type A omits the size.
std::string render_spec(const SeaweedSpec& spec);

/// Parses a bare composition token ("-" or "2,1,3").
Composition parse_composition(std::string_view text);

/// All 2^(n-1) compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

/// The empty composition followed by the compositions of 1, 2, ..., n
/// (sum-major, lexicographic within a sum). 2^n entries.
std::vector<Composition> compositions_up_to(int n);

/// Compositions of exactly `total` with exactly `parts` parts, lexicographic.
std::vector<Composition> compositions_with_parts(int total, int parts);

/// Number of odd parts across both compositions.
int odd_part_count(const Composition& a, const Composition& b);

}  // namespace seaweed
