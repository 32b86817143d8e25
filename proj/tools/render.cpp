#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace seaweed::cli {

namespace {

struct Arc {
  int lo;
  int hi;
  int depth;
};

// Depth = number of same-side arcs strictly enclosing the arc.
std::vector<Arc> layered(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Arc> out;
  std::vector<int> open;  // hi endpoints of enclosing arcs
  for (const auto& [lo, hi] : arcs) {
    while (!open.empty() && open.back() < lo) open.pop_back();
    out.push_back(Arc{lo, hi, static_cast<int>(open.size())});
    open.push_back(hi);
  }
  return out;
}

std::vector<std::string> arc_rows(const std::vector<Arc>& arcs, const std::vector<int>& centre,
                                  std::size_t width, char corner) {
  int max_depth = -1;
  for (const auto& a : arcs) max_depth = std::max(max_depth, a.depth);
  std::vector<std::string> rows(max_depth + 1, std::string(width, ' '));
  for (const auto& a : arcs) {
    const auto l = static_cast<std::size_t>(centre[a.lo]);
    const auto r = static_cast<std::size_t>(centre[a.hi]);
    auto& row = rows[a.depth];
    row[l] = corner;
    row[r] = corner;
    for (auto c = l + 1; c < r; ++c) row[c] = '-';
    for (int d = a.depth + 1; d <= max_depth; ++d) {
      rows[d][l] = '|';
      rows[d][r] = '|';
    }
  }
  for (auto& row : rows) row.erase(row.find_last_not_of(' ') + 1);
  return rows;
}

}  // namespace

std::string render_dot(const Meander& m, const std::string& title) {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  out << "  graph [rankdir=LR, splines=curved];\n";
  out << "  node [shape=circle];\n";
  out << "  { rank=same;";
  for (int v = 1; v <= m.size(); ++v) out << ' ' << v << ';';
  out << " }\n";
  for (int v = 1; v <= m.size(); ++v) {
    out << "  " << v;
    if (m.in_tail(v)) out << " [tail=true, style=filled, fillcolor=yellow]";
    out << ";\n";
  }
  if (m.size() > 1) {
    out << "  ";
    for (int v = 1; v <= m.size(); ++v) out << v << (v < m.size() ? " -- " : "");
    out << " [style=invis];\n";
  }
  for (const auto& [j, k] : m.top_arcs()) out << "  " << j << " -- " << k << " [side=top];\n";
  for (const auto& [j, k] : m.bottom_arcs()) {
    out << "  " << j << " -- " << k << " [side=bottom, style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_ascii(const Meander& m) {
  const int n = m.size();
  const auto digits = std::to_string(n).size();
  const std::size_t cell = digits + 3;  // room for "[v]" plus a gap
  std::vector<int> centre(n + 1);
  std::string line;
  for (int v = 1; v <= n; ++v) {
    std::string label = std::to_string(v);
    if (m.in_tail(v)) label = "[" + label + "]";
    const std::size_t start = (v - 1) * cell;
    const std::size_t pad = (cell - label.size()) / 2;
    line.resize(start + cell, ' ');
    line.replace(start + pad, label.size(), label);
    centre[v] = static_cast<int>(start + pad + (m.in_tail(v) ? 1 : 0) +
                                 (std::to_string(v).size() - 1) / 2);
  }
  line.erase(line.find_last_not_of(' ') + 1);
  const std::size_t width = n * cell;

  std::ostringstream out;
  for (const auto& row : arc_rows(layered(m.top_arcs()), centre, width, '.')) out << row << '\n';
  out << line << '\n';
  auto bottom = arc_rows(layered(m.bottom_arcs()), centre, width, '\'');
  std::reverse(bottom.begin(), bottom.end());
  for (const auto& row : bottom) out << row << '\n';
  return out.str();
}

}  // namespace seaweed::cli
