#include "kfh/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace kfh {

void GridDiagram::validate() const {
  if (n < 2) throw LinkError("grid: size must be >= 2");
  if (int(X.size()) != n || int(O.size()) != n) throw LinkError("grid: X/O length mismatch");
  std::vector<char> sx(size_t(n), 0), so(size_t(n), 0);
  for (int c = 0; c < n; ++c) {
    int x = X[size_t(c)], o = O[size_t(c)];
    if (x < 0 || x >= n || o < 0 || o >= n) throw LinkError("grid: marker row out of range");
    if (sx[size_t(x)]++ || so[size_t(o)]++) throw LinkError("grid: X and O must be permutations");
    if (x == o) throw LinkError("grid: X and O share a cell in column " + std::to_string(c));
  }
}

static std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[size_t(p[i])] = int(i);
  return q;
}

std::vector<int> grid_column_components(const GridDiagram& g) {
  auto xinv = inverse(g.X);
  std::vector<int> comp(size_t(g.n), -1);
  int next = 0;
  for (int c = 0; c < g.n; ++c) {
    if (comp[size_t(c)] >= 0) continue;
    for (int d = c; comp[size_t(d)] < 0; d = xinv[size_t(g.O[size_t(d)])]) comp[size_t(d)] = next;
    ++next;
  }
  return comp;
}

int grid_component_count(const GridDiagram& g) {
  auto c = grid_column_components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<GridCrossing> grid_crossings(const GridDiagram& g) {
  auto xinv = inverse(g.X), oinv = inverse(g.O);
  auto comp = grid_column_components(g);
  std::vector<GridCrossing> out;
  for (int c = 0; c < g.n; ++c) {
    int lo = std::min(g.X[size_t(c)], g.O[size_t(c)]), hi = std::max(g.X[size_t(c)], g.O[size_t(c)]);
    int dv = g.O[size_t(c)] > g.X[size_t(c)] ? 1 : -1;
    for (int r = lo + 1; r < hi; ++r) {
      int a = xinv[size_t(r)], b = oinv[size_t(r)];
      if (std::min(a, b) < c && c < std::max(a, b)) {
        int dh = a > b ? 1 : -1;  // horizontal runs O -> X
        GridCrossing x;
        x.col = c;
        x.row = r;
        x.sign = -dv * dh > 0 ? 1 : -1;
        x.comp_vertical = comp[size_t(c)];
        // the row's strand belongs to the component of the column holding its X
        x.comp_horizontal = comp[size_t(a)];
        out.push_back(x);
      }
    }
  }
  return out;
}

static std::vector<std::vector<int>> lk_from_doubled(const std::vector<std::vector<int>>& twice) {
  auto lk = twice;
  for (auto& row : lk)
    for (int& v : row) {
      if (v % 2 != 0) throw LinkError("linking number: odd crossing sum");
      v /= 2;
    }
  return lk;
}

ComponentData component_data(const GridDiagram& g, const std::vector<std::pair<int, int>>& sites) {
  g.validate();
  ComponentData d;
  d.count = grid_component_count(g);
  std::vector<std::vector<int>> twice(size_t(d.count), std::vector<int>(size_t(d.count), 0));
  auto xs = grid_crossings(g);
  for (auto& x : xs)
    if (x.comp_vertical != x.comp_horizontal) {
      twice[size_t(x.comp_vertical)][size_t(x.comp_horizontal)] += x.sign;
      twice[size_t(x.comp_horizontal)][size_t(x.comp_vertical)] += x.sign;
    }
  d.pairwise_lk = lk_from_doubled(twice);
  for (auto& s : sites) {
    auto it = std::find_if(xs.begin(), xs.end(),
                           [&](const GridCrossing& x) { return x.col == s.first && x.row == s.second; });
    if (it == xs.end()) throw LinkError("component_data: site is not a crossing of the grid");
    d.twist_site_same_component.push_back(it->comp_vertical == it->comp_horizontal);
  }
  return d;
}

ComponentData component_data(const BraidWord& b, const std::vector<int>& sites) {
  b.validate();
  auto comp_of_start = braid_closure_components(b);
  ComponentData d;
  d.count = braid_component_count(b);
  std::vector<std::vector<int>> twice(size_t(d.count), std::vector<int>(size_t(d.count), 0));
  std::vector<int> at(size_t(b.strands));  // starting position of the strand at each position
  for (int p = 0; p < b.strands; ++p) at[size_t(p)] = p;
  std::vector<std::pair<int, int>> letter_comps;
  for (int g : b.word) {
    int i = std::abs(g) - 1;
    int ca = comp_of_start[size_t(at[size_t(i)])], cb = comp_of_start[size_t(at[size_t(i + 1)])];
    letter_comps.emplace_back(ca, cb);
    if (ca != cb) {
      twice[size_t(ca)][size_t(cb)] += g > 0 ? 1 : -1;
      twice[size_t(cb)][size_t(ca)] += g > 0 ? 1 : -1;
    }
    std::swap(at[size_t(i)], at[size_t(i + 1)]);
  }
  d.pairwise_lk = lk_from_doubled(twice);
  for (int s : sites) {
    if (s < 0 || size_t(s) >= b.word.size()) throw LinkError("component_data: site out of range");
    d.twist_site_same_component.push_back(letter_comps[size_t(s)].first == letter_comps[size_t(s)].second);
  }
  return d;
}

GridDiagram grid_mirror(const GridDiagram& g) {
  GridDiagram m = g;
  std::reverse(m.X.begin(), m.X.end());
  std::reverse(m.O.begin(), m.O.end());
  return m;
}

GridDiagram grid_cyclic_shift(const GridDiagram& g, int dcol, int drow) {
  GridDiagram s = g;
  int n = g.n;
  for (int c = 0; c < n; ++c) {
    int nc = ((c + dcol) % n + n) % n;
    s.X[size_t(nc)] = ((g.X[size_t(c)] + drow) % n + n) % n;
    s.O[size_t(nc)] = ((g.O[size_t(c)] + drow) % n + n) % n;
  }
  return s;
}

GridDiagram grid_transpose_markers(const GridDiagram& g) {
  GridDiagram s = g;
  std::swap(s.X, s.O);
  return s;
}

static bool adjacent(int a, int b, int n) {
  int d = ((a - b) % n + n) % n;
  return d == 1 || d == n - 1;
}

bool try_destabilize_at(GridDiagram& g, int c, bool x_marker) {
  int n = g.n;
  if (n <= 2) return false;
  auto& T = x_marker ? g.X : g.O;  // type of the corner marker
  auto& P = x_marker ? g.O : g.X;  // type of its partners
  int r = T[size_t(c)];
  int r2 = P[size_t(c)];
  if (!adjacent(r, r2, n)) return false;
  int c2 = -1;
  for (int d = 0; d < n; ++d)
    if (P[size_t(d)] == r) c2 = d;
  if (!adjacent(c, c2, n)) return false;
  if (T[size_t(c2)] == r2) return false;  // isolated 2x2 unknot, nothing to merge into
  std::vector<int> nt, np;
  for (int d = 0; d < n; ++d) {
    if (d == c) continue;
    int t = T[size_t(d)], p = (d == c2) ? r2 : P[size_t(d)];
    nt.push_back(t > r ? t - 1 : t);
    np.push_back(p > r ? p - 1 : p);
  }
  GridDiagram h;
  h.n = n - 1;
  if (x_marker) {
    h.X = nt;
    h.O = np;
  } else {
    h.O = nt;
    h.X = np;
  }
  g = h;
  return true;
}

static bool commutable(int a1, int b1, int a2, int b2) {
  int lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
  int lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
  if (lo1 == lo2 || lo1 == hi2 || hi1 == lo2 || hi1 == hi2) return false;
  bool disjoint = hi1 < lo2 || hi2 < lo1;
  bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
  return disjoint || nested;
}

bool try_commute_columns(GridDiagram& g, int c) {
  int n = g.n;
  int d = (c + 1) % n;
  if (!commutable(g.X[size_t(c)], g.O[size_t(c)], g.X[size_t(d)], g.O[size_t(d)])) return false;
  std::swap(g.X[size_t(c)], g.X[size_t(d)]);
  std::swap(g.O[size_t(c)], g.O[size_t(d)]);
  return true;
}

bool try_commute_rows(GridDiagram& g, int r) {
  int n = g.n;
  int s = (r + 1) % n;
  auto xinv = inverse(g.X), oinv = inverse(g.O);
  if (!commutable(xinv[size_t(r)], oinv[size_t(r)], xinv[size_t(s)], oinv[size_t(s)])) return false;
  for (int c = 0; c < n; ++c) {
    for (int* v : {&g.X[size_t(c)], &g.O[size_t(c)]}) {
      if (*v == r)
        *v = s;
      else if (*v == s)
        *v = r;
    }
  }
  return true;
}

static bool destabilize_any(GridDiagram& g) {
  for (int c = 0; c < g.n; ++c)
    for (bool xm : {true, false})
      if (try_destabilize_at(g, c, xm)) return true;
  return false;
}

static bool has_destabilization(const GridDiagram& g) {
  GridDiagram h = g;
  return destabilize_any(h);
}

// all single commutation moves, columns first
static std::vector<GridDiagram> neighbours(const GridDiagram& g) {
  std::vector<GridDiagram> out;
  for (int c = 0; c < g.n; ++c) {
    GridDiagram h = g;
    if (try_commute_columns(h, c)) out.push_back(h);
  }
  for (int r = 0; r < g.n; ++r) {
    GridDiagram h = g;
    if (try_commute_rows(h, r)) out.push_back(h);
  }
  return out;
}

// breadth-first search over commutations for a grid admitting a destabilization
static bool commute_towards_destabilization(GridDiagram& g, int depth, int& budget) {
  std::vector<GridDiagram> layer{g};
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen{{g.X, g.O}};
  for (int d = 1; d <= depth && budget > 0; ++d) {
    std::vector<GridDiagram> next;
    for (auto& h : layer)
      for (auto& h2 : neighbours(h)) {
        if (!seen.insert({h2.X, h2.O}).second) continue;
        if (has_destabilization(h2)) {
          g = h2;
          budget -= d;
          return true;
        }
        next.push_back(std::move(h2));
      }
    if (next.size() > 200000) break;
    layer = std::move(next);
  }
  return false;
}

GridDiagram simplify_grid(const GridDiagram& g0, int budget) {
  g0.validate();
  GridDiagram g = g0;
  while (budget > 0 && g.n > 2) {
    if (destabilize_any(g)) {
      --budget;
      continue;
    }
    if (!commute_towards_destabilization(g, std::min(budget, 4), budget)) break;
  }
  return g;
}

}  // namespace kfh
