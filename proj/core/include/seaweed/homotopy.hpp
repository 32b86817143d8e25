#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

/// A circle (with whatever it encloses) or a point.
struct HomotopyNode {
  bool circle = false;
  std::vector<HomotopyNode> children;
};

/// Plane homotopy type of a type-A meander: a forest of nested circles
/// (graph cycles) and points (path components).
///
/// Canonical string grammar:
///   forest := item (" " item)*
///   item   := "." | "C(" forest? ")"
/// Siblings are ordered by height, then circle count, then point count (all
/// descending), then by canonical string.
class HomotopyType {
 public:
  HomotopyType() = default;
  explicit HomotopyType(std::vector<HomotopyNode> roots);

  /// Inverse of canonical(); throws std::invalid_argument.
  static HomotopyType parse(std::string_view text);

  /// A chain of `circles` nested circles, with a point at the centre when
  /// `centre_point` is set (a point alone when circles == 0).
  static HomotopyNode chain(int circles, bool centre_point);

  const std::vector<HomotopyNode>& roots() const { return roots_; }
  int circle_count() const { return circles_; }
  int point_count() const { return points_; }

  const std::string& canonical() const { return canonical_; }

  friend bool operator==(const HomotopyType& x, const HomotopyType& y) {
    return x.canonical_ == y.canonical_;
  }

 private:
  std::vector<HomotopyNode> roots_;
  int circles_ = 0;
  int points_ = 0;
  std::string canonical_;
};

/// Computes the homotopy type geometrically: a component lies inside cycle Y
/// iff an upward ray from its vertex crosses an odd number of Y's top arcs.
/// Throws std::invalid_argument for type C meanders.
HomotopyType homotopy_type(const Meander& m);

/// True iff the forest is a single point.
bool is_homotopically_trivial(const HomotopyType& h);

}  // namespace seaweed
