#include <algorithm>

#include "engine.hpp"

namespace kfh {

static SparseComplexGF2 build(const GridDiagram& g, const HfkOptions& opt, bool filtered) {
  Gradings gr(g);
  auto blocks = enumerate_states(gr, filtered ? std::nullopt : opt.a2_window, opt.max_states);
  SparseComplexGF2 c;
  c.n = g.n;
  c.l = gr.components();
  c.filtered = filtered;
  // generators sorted by code overall so that targets can be found in any block
  std::vector<std::pair<StateCode, std::pair<int, int>>> all;
  for (auto& b : blocks)
    for (size_t i = 0; i < b.codes.size(); ++i) all.push_back({b.codes[i], {b.M[i], b.A2}});
  std::sort(all.begin(), all.end());
  for (auto& [code, ma] : all) {
    c.gens.push_back(code);
    c.M.push_back(ma.first);
    c.A2.push_back(ma.second);
  }
  c.col_start.push_back(0);
  int x[kMaxGridSize];
  std::vector<std::uint32_t> col;
  for (size_t i = 0; i < c.size(); ++i) {
    StateCode code = c.gens[i];
    for (int k = g.n - 1; k >= 0; --k) {
      x[k] = int(code & 15);
      code >>= 4;
    }
    col.clear();
    bool ok = true;
    detail::for_each_rectangle(x, g, filtered, [&](int a, int b, int) {
      StateCode y = detail::swap_columns(c.gens[i], g.n, a, b, x[a], x[b]);
      auto pos = std::lower_bound(c.gens.begin(), c.gens.end(), y);
      if (pos == c.gens.end() || *pos != y) {
        ok = false;  // target lies outside the window
        return;
      }
      col.push_back(std::uint32_t(pos - c.gens.begin()));
    });
    if (!ok && !opt.a2_window) throw InternalError("rectangle target missing from the complex");
    std::sort(col.begin(), col.end());
    size_t w = 0;
    for (size_t k = 0; k < col.size();) {
      size_t j = k;
      while (j < col.size() && col[j] == col[k]) ++j;
      if ((j - k) % 2 == 1) col[w++] = col[k];
      k = j;
    }
    col.resize(w);
    c.entries.insert(c.entries.end(), col.begin(), col.end());
    c.col_start.push_back(std::uint32_t(c.entries.size()));
  }
  return c;
}

SparseComplexGF2 tilde_complex(const GridDiagram& g, const HfkOptions& opt) { return build(g, opt, false); }

SparseComplexGF2 filtered_complex(const GridDiagram& g, const HfkOptions& opt) { return build(g, opt, true); }

}  // namespace kfh
