#pragma once
// Internal pieces shared by the complex builders, the homology engine and tau.

#include <cstdint>
#include <map>
#include <vector>

#include "kfh/hfk.hpp"

namespace kfh::detail {

// Calls f(a, b) for every empty rectangle leaving state x with lower-left corner in column a
// and upper-right corner in column b (wrapping on the torus). Rectangles containing an O
// marker are skipped; X markers are skipped too unless allow_x is set, in which case
// f receives the number of X markers inside as a third argument.
template <class F>
void for_each_rectangle(const int* x, const GridDiagram& g, bool allow_x, F&& f) {
  const int n = g.n;
  for (int a = 0; a < n; ++a) {
    const int xa = x[a];
    int min_pt = n, min_mk = n;
    for (int w = 1; w < n; ++w) {
      int c = a + w - 1;
      if (c >= n) c -= n;
      int off_o = g.O[size_t(c)] - xa;
      if (off_o < 0) off_o += n;
      if (off_o < min_mk) min_mk = off_o;
      if (!allow_x) {
        int off_x = g.X[size_t(c)] - xa;
        if (off_x < 0) off_x += n;
        if (off_x < min_mk) min_mk = off_x;
      }
      if (min_mk == 0 || min_pt == 1) break;
      int b = a + w;
      if (b >= n) b -= n;
      int d = x[b] - xa;
      if (d < 0) d += n;
      if (d < min_pt && d <= min_mk) {
        if (allow_x) {
          int nx = 0;
          for (int v = 0; v < w; ++v) {
            int cc = a + v;
            if (cc >= n) cc -= n;
            int off = g.X[size_t(cc)] - xa;
            if (off < 0) off += n;
            if (off < d) ++nx;
          }
          f(a, b, nx);
        } else {
          f(a, b, 0);
        }
      }
      if (d < min_pt) min_pt = d;
    }
  }
}

inline StateCode swap_columns(StateCode code, int n, int a, int b, int xa, int xb) {
  int sa = 4 * (n - 1 - a), sb = 4 * (n - 1 - b);
  code &= ~((StateCode(15) << sa) | (StateCode(15) << sb));
  return code | (StateCode(xb) << sa) | (StateCode(xa) << sb);
}

// Column reduction over GF(2). Columns are sorted row lists; the pivot of a column is its
// largest row. Returns the rank; marks the pivot rows in pivot_rows (sized to the row count).
std::int64_t reduce_columns(std::vector<std::vector<std::uint32_t>>& cols, size_t nrows,
                            std::vector<char>& pivot_rows);

// ranks of tilde homology per Maslov grading for one Alexander block
std::map<int, std::int64_t> block_homology(const Gradings& gr, const StateBlock& block);

}  // namespace kfh::detail
