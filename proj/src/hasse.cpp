#include "upsem/hasse.hpp"

#include <algorithm>

#include "upsem/errors.hpp"

namespace upsem {

HasseDiagram hasse_diagram(const ExtensionSemigroup& e) {
  const AnalysisReport a = analyze_extension(e);
  if (!a.semilattice)
    throw not_semilattice_error(
        "the " + to_string(e.carrier.kind) + " extension of this carrier is "
        "not a semilattice, so it has no idempotent order");
  const int n = e.size();
  // leq[i] packed as words of 64 nodes
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n) * words, 0),
      down(static_cast<std::size_t>(n) * words, 0);
  auto set_bit = [&](std::vector<std::uint64_t>& v, int row, int col) {
    v[static_cast<std::size_t>(row) * words + col / 64] |=
        std::uint64_t{1} << (col % 64);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e.product_index(i, j) == i) {  // i <= j
        set_bit(up, i, j);
        set_bit(down, j, i);
      }

  HasseDiagram d;
  d.space = e.carrier.kind;
  d.base_order = e.base.order;
  d.nodes = e.carrier.families;
  for (const UpFamily& f : d.nodes)
    d.labels.push_back(family_display_name(f, e.carrier.kind));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || e.product_index(i, j) != i) continue;
      bool cover = true;
      for (int w = 0; w < words && cover; ++w) {
        std::uint64_t between =
            up[static_cast<std::size_t>(i) * words + w] &
            down[static_cast<std::size_t>(j) * words + w];
        if (w == i / 64) between &= ~(std::uint64_t{1} << (i % 64));
        if (w == j / 64) between &= ~(std::uint64_t{1} << (j % 64));
        if (between) cover = false;
      }
      if (cover) d.edges.emplace_back(i, j);
    }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::string to_dot(const HasseDiagram& d) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    std::string label;
    for (char c : d.labels[i]) {
      if (c == '"' || c == '\\') label += '\\';
      label += c;
    }
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [lo, hi] : d.edges)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace upsem
