#include "kfh/morse.hpp"

#include <algorithm>
#include <cstdlib>

namespace kfh {

namespace {

// A piece is one horizontal segment (one grid row); a column joins two pieces.
struct Builder {
  std::vector<int> order;                 // piece ids, top to bottom
  std::vector<std::pair<int, int>> cols;  // pieces joined by each column
  std::vector<int> hint;                  // wanted vertical direction per column (+1 up)
  std::vector<int> under;                 // piece crossed by the column, -1 for cups and caps
  std::vector<int> want_under;            // wanted direction of that piece (+1 rightward)
  std::vector<std::vector<int>> piece_cols;
  std::vector<int> active;                // pieces at each strand position, top first

  int new_piece() {
    piece_cols.emplace_back();
    return int(piece_cols.size()) - 1;
  }
  void insert_at(int piece, int at) { order.insert(order.begin() + at, piece); }
  int index_of(int piece) const {
    return int(std::find(order.begin(), order.end(), piece) - order.begin());
  }
  int add_col(int a, int b, int h, int u, int wu) {
    int c = int(cols.size());
    cols.emplace_back(a, b);
    hint.push_back(h);
    under.push_back(u);
    want_under.push_back(wu);
    piece_cols[size_t(a)].push_back(c);
    piece_cols[size_t(b)].push_back(c);
    return c;
  }
};

}  // namespace

MorseGrid morse_to_grid(const std::vector<MorseElement>& word) {
  Builder B;
  auto& act = B.active;
  for (auto& e : word) {
    int s = int(act.size());
    switch (e.kind) {
      case MorseElement::Cup: {
        if (e.pos < 0 || e.pos > s) throw LinkError("morse: cup position out of range");
        int u = B.new_piece(), d = B.new_piece();
        int at = e.pos < s ? B.index_of(act[size_t(e.pos)])
                           : (s > 0 ? B.index_of(act.back()) + 1 : int(B.order.size()));
        B.insert_at(d, at);
        B.insert_at(u, at);
        B.add_col(u, d, 0, -1, 0);
        act.insert(act.begin() + e.pos, {u, d});
        break;
      }
      case MorseElement::Cap: {
        if (e.pos < 0 || e.pos + 1 >= s) throw LinkError("morse: cap position out of range");
        B.add_col(act[size_t(e.pos)], act[size_t(e.pos) + 1], 0, -1, 0);
        act.erase(act.begin() + e.pos, act.begin() + e.pos + 2);
        break;
      }
      case MorseElement::Cross: {
        if (e.pos < 0 || e.pos + 1 >= s) throw LinkError("morse: crossing position out of range");
        if (e.sign != 1 && e.sign != -1) throw LinkError("morse: crossing sign must be +-1");
        int top = act[size_t(e.pos)], bot = act[size_t(e.pos) + 1];
        int fresh = B.new_piece();
        if (e.sign > 0) {
          // top strand drops below bot
          B.insert_at(fresh, B.index_of(bot) + 1);
          B.add_col(top, fresh, -e.hint, bot, e.hint);
          act[size_t(e.pos)] = bot;
          act[size_t(e.pos) + 1] = fresh;
        } else {
          B.insert_at(fresh, B.index_of(top));
          B.add_col(bot, fresh, e.hint, top, e.hint);
          act[size_t(e.pos)] = fresh;
          act[size_t(e.pos) + 1] = top;
        }
        break;
      }
    }
  }
  if (!act.empty()) throw LinkError("morse: word leaves open strands");
  int n = int(B.cols.size());
  if (n < 2) throw LinkError("morse: empty diagram");

  std::vector<int> row_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) row_of[size_t(B.order[size_t(i)])] = n - 1 - i;

  // walk each component once, then flip whole components to honour the first hint touching them
  MorseGrid out;
  out.grid.n = n;
  out.grid.X.assign(size_t(n), -1);
  out.grid.O.assign(size_t(n), -1);
  std::vector<int> from(size_t(n), -1);  // piece at the X end of each column
  std::vector<int> comp(size_t(n), -1), piece_comp(B.piece_cols.size(), -1);
  int ncomp = 0;
  for (int c0 = 0; c0 < n; ++c0) {
    if (comp[size_t(c0)] >= 0) continue;
    int c = c0, p = B.cols[size_t(c0)].first;
    do {
      comp[size_t(c)] = ncomp;
      from[size_t(c)] = p;
      int q = B.cols[size_t(c)].first == p ? B.cols[size_t(c)].second : B.cols[size_t(c)].first;
      piece_comp[size_t(q)] = ncomp;
      auto& pc = B.piece_cols[size_t(q)];
      c = pc[0] == c ? pc[1] : pc[0];
      p = q;
    } while (c != c0);
    ++ncomp;
  }
  auto other = [&](int c, int p) { return B.cols[size_t(c)].first == p ? B.cols[size_t(c)].second : B.cols[size_t(c)].first; };
  auto vdir = [&](int c) { return row_of[size_t(other(c, from[size_t(c)]))] > row_of[size_t(from[size_t(c)])] ? 1 : -1; };
  // horizontal pieces run from the O end to the X end
  auto piece_dir = [&](int piece) {
    auto& pc = B.piece_cols[size_t(piece)];
    int lft = std::min(pc[0], pc[1]);
    return from[size_t(lft)] == piece ? -1 : 1;  // leaving through the left column means leftward
  };
  std::vector<int> flip(size_t(ncomp), 0);  // 0 undecided, 1 keep, -1 flip
  for (int c = 0; c < n; ++c) {
    if (B.hint[size_t(c)] == 0) continue;
    int& fc = flip[size_t(comp[size_t(c)])];
    if (fc == 0) fc = vdir(c) == B.hint[size_t(c)] ? 1 : -1;
    int u = B.under[size_t(c)];
    int& fu = flip[size_t(piece_comp[size_t(u)])];
    if (fu == 0) fu = piece_dir(u) == B.want_under[size_t(c)] ? 1 : -1;
  }
  for (int c = 0; c < n; ++c)
    if (flip[size_t(comp[size_t(c)])] < 0) from[size_t(c)] = other(c, from[size_t(c)]);
  for (int c = 0; c < n; ++c) {
    out.grid.X[size_t(c)] = row_of[size_t(from[size_t(c)])];
    out.grid.O[size_t(c)] = row_of[size_t(other(c, from[size_t(c)]))];
  }

  for (int c = 0; c < n; ++c) {
    if (B.under[size_t(c)] < 0) continue;
    out.crossing_sites.emplace_back(c, row_of[size_t(B.under[size_t(c)])]);
    if (B.hint[size_t(c)] != 0 &&
        (vdir(c) != B.hint[size_t(c)] || piece_dir(B.under[size_t(c)]) != B.want_under[size_t(c)]))
      out.orientation_conflict = true;
  }
  out.grid.validate();
  return out;
}

std::vector<MorseElement> braid_closure_word(const BraidWord& b) {
  b.validate();
  int s = b.strands;
  std::vector<MorseElement> w;
  for (int q = 0; q < s; ++q) w.push_back({MorseElement::Cup, q, 1, 0});
  for (int g : b.word) w.push_back({MorseElement::Cross, s + std::abs(g) - 1, g > 0 ? 1 : -1, 1});
  for (int q = s - 1; q >= 0; --q) w.push_back({MorseElement::Cap, q, 1, 0});
  return w;
}

GridDiagram braid_to_grid(const BraidWord& b) {
  auto mg = morse_to_grid(braid_closure_word(b));
  if (mg.orientation_conflict) throw LinkError("braid_to_grid: inconsistent strand orientation");
  int bound = b.strands + int(b.word.size()) + 1;
  GridDiagram g = simplify_grid(mg.grid, 4 * mg.grid.n + 16);
  (void)bound;
  return g;
}

}  // namespace kfh
