#include "muint/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace muint {

std::string render_color_table(const Graph& g, const EdgeColoring& c,
                               const std::vector<std::string>& names) {
  if (static_cast<int>(c.colors.size()) != g.edge_count())
    throw std::invalid_argument("render_color_table: coloring size mismatch");
  if (!names.empty() && static_cast<int>(names.size()) != g.n)
    throw std::invalid_argument("render_color_table: names size mismatch");

  std::vector<std::string> label(g.n);
  for (int v = 0; v < g.n; ++v)
    label[v] = names.empty() ? std::to_string(v) : names[v];

  std::vector<std::vector<std::string>> cell(g.n, std::vector<std::string>(g.n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    cell[u][v] = cell[v][u] = std::to_string(c.colors[e]);
  }

  size_t head = 0;
  for (int v = 0; v < g.n; ++v) head = std::max(head, label[v].size());
  std::vector<size_t> width(g.n);
  for (int v = 0; v < g.n; ++v) {
    width[v] = label[v].size();
    for (int u = 0; u < g.n; ++u) width[v] = std::max(width[v], cell[u][v].size());
  }

  auto pad = [](const std::string& s, size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };

  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::ostringstream os;
  std::string row = std::string(head, ' ');
  for (int v = 0; v < g.n; ++v) row += ' ' + pad(label[v], width[v]);
  os << row << '\n'; // header ends in a label, nothing to strip
  for (int u = 0; u < g.n; ++u) {
    row = pad(label[u], head);
    for (int v = 0; v < g.n; ++v) row += ' ' + pad(cell[u][v], width[v]);
    os << rstrip(row) << '\n';
  }
  return os.str();
}

} // namespace muint
