#include "seaweed/homotopy.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace seaweed {

namespace {

struct Summary {
  int height = 0;
  int circles = 0;
  int points = 0;
  std::string text;
};

// Sorts children in place and returns the node's summary.
Summary canonicalize(HomotopyNode& node) {
  if (!node.circle) {
    node.children.clear();
    return Summary{0, 0, 1, "."};
  }
  std::vector<std::pair<Summary, HomotopyNode>> kids;
  kids.reserve(node.children.size());
  for (auto& child : node.children) {
    auto s = canonicalize(child);
    kids.emplace_back(std::move(s), std::move(child));
  }
  std::sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) {
    const auto& l = x.first;
    const auto& r = y.first;
    return std::tie(r.height, r.circles, r.points, l.text) <
           std::tie(l.height, l.circles, l.points, r.text);
  });
  Summary out{1, 1, 0, "C("};
  node.children.clear();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto& [s, child] = kids[i];
    out.height = std::max(out.height, s.height + 1);
    out.circles += s.circles;
    out.points += s.points;
    if (i) out.text += ' ';
    out.text += s.text;
    node.children.push_back(std::move(child));
  }
  out.text += ')';
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<HomotopyNode> forest(bool nested) {
    std::vector<HomotopyNode> items;
    skip_spaces();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      items.push_back(item());
      skip_spaces();
    }
    if (!nested && pos_ != text_.size()) fail("unexpected ')'");
    return items;
  }

 private:
  HomotopyNode item() {
    if (text_[pos_] == '.') {
      ++pos_;
      return HomotopyNode{};
    }
    if (text_.substr(pos_, 2) != "C(") fail("expected '.' or 'C('");
    pos_ += 2;
    HomotopyNode node{true, forest(true)};
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("unterminated circle");
    ++pos_;
    return node;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("homotopy string: ") + what + " at offset " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HomotopyType::HomotopyType(std::vector<HomotopyNode> roots) {
  HomotopyNode top{true, std::move(roots)};
  auto summary = canonicalize(top);
  roots_ = std::move(top.children);
  circles_ = summary.circles - 1;
  points_ = summary.points;
  // Strip the artificial outer "C(" ... ")".
  canonical_ = summary.text.substr(2, summary.text.size() - 3);
}

HomotopyType HomotopyType::parse(std::string_view text) {
  Parser parser(text);
  return HomotopyType(parser.forest(false));
}

HomotopyNode HomotopyType::chain(int circles, bool centre_point) {
  HomotopyNode node{};
  if (circles == 0) return node;
  node.circle = true;
  if (centre_point) node.children.push_back(HomotopyNode{});
  for (int i = 1; i < circles; ++i) {
    HomotopyNode outer{true, {}};
    outer.children.push_back(std::move(node));
    node = std::move(outer);
  }
  return node;
}

HomotopyType homotopy_type(const Meander& m) {
  if (m.algebra() != Algebra::A) {
    throw std::invalid_argument("homotopy type is defined for type A meanders only");
  }
  const int n = m.size();
  const auto comps = components(m);
  const int count = static_cast<int>(comps.size());

  // enclosing[c] = cycles containing component c.
  std::vector<std::vector<int>> enclosing(count);
  std::vector<int> crossings(n + 2);
  for (int y = 0; y < count; ++y) {
    if (!comps[y].is_cycle) continue;
    std::fill(crossings.begin(), crossings.end(), 0);
    for (int j : comps[y].vertices) {
      const int k = m.top(j);
      if (k > j) {
        crossings[j + 1] += 1;
        crossings[k] -= 1;
      }
    }
    for (int v = 1; v <= n; ++v) crossings[v] += crossings[v - 1];
    for (int c = 0; c < count; ++c) {
      if (c == y) continue;
      const bool inside_lo = crossings[comps[c].vertices.front()] % 2 != 0;
      const bool inside_hi = crossings[comps[c].vertices.back()] % 2 != 0;
      if (inside_lo != inside_hi) {
        throw std::logic_error("meander component straddles a cycle");
      }
      if (inside_lo) enclosing[c].push_back(y);
    }
  }

  // Containment is laminar: the parent is the enclosing cycle of greatest depth.
  std::vector<int> parent(count, -1);
  for (int c = 0; c < count; ++c) {
    int best_depth = -1;
    for (int y : enclosing[c]) {
      const int depth = static_cast<int>(enclosing[y].size());
      if (depth > best_depth) {
        best_depth = depth;
        parent[c] = y;
      }
    }
  }

  // Assemble bottom-up: deeper components first.
  std::vector<int> order(count);
  for (int c = 0; c < count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return enclosing[x].size() > enclosing[y].size();
  });
  std::vector<HomotopyNode> nodes(count);
  for (int c = 0; c < count; ++c) nodes[c].circle = comps[c].is_cycle;
  std::vector<HomotopyNode> roots;
  for (int c : order) {
    if (parent[c] >= 0) {
      nodes[parent[c]].children.push_back(std::move(nodes[c]));
    } else {
      roots.push_back(std::move(nodes[c]));
    }
  }
  return HomotopyType(std::move(roots));
}

bool is_homotopically_trivial(const HomotopyType& h) {
  return h.roots().size() == 1 && !h.roots().front().circle;
}

}  // namespace seaweed
