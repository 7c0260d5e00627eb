#pragma once
// Toroidal grid diagrams. X[c] / O[c] give the row of the marker in column c;
// rows grow upward, vertical segments run X -> O and cross over horizontal ones.

#include <utility>
#include <vector>

#include "kfh/braid.hpp"

namespace kfh {

struct GridDiagram {
  int n = 0;
  std::vector<int> X;
  std::vector<int> O;

  void validate() const;
  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

struct GridCrossing {
  int col = 0;  // vertical strand (over)
  int row = 0;  // horizontal strand (under)
  int sign = 0;
  int comp_vertical = 0;
  int comp_horizontal = 0;
};

struct ComponentData {
  int count = 0;
  std::vector<std::vector<int>> pairwise_lk;
  std::vector<bool> twist_site_same_component;
};

// component id of the strand through each column, numbered by first column
std::vector<int> grid_column_components(const GridDiagram& g);
int grid_component_count(const GridDiagram& g);
std::vector<GridCrossing> grid_crossings(const GridDiagram& g);

// sites are (column, row) crossings of the grid
ComponentData component_data(const GridDiagram& g, const std::vector<std::pair<int, int>>& sites);
// sites are letter indices of the braid word
ComponentData component_data(const BraidWord& b, const std::vector<int>& sites);

GridDiagram grid_mirror(const GridDiagram& g);
GridDiagram grid_cyclic_shift(const GridDiagram& g, int dcol, int drow);
GridDiagram grid_transpose_markers(const GridDiagram& g);  // swap X and O (reverse orientation)

// moves used by simplify_grid; each returns false when not applicable
bool try_destabilize_at(GridDiagram& g, int col, bool x_marker);
bool try_commute_columns(GridDiagram& g, int c);  // columns c and c+1 (mod n)
bool try_commute_rows(GridDiagram& g, int r);     // rows r and r+1 (mod n)

GridDiagram simplify_grid(const GridDiagram& g, int budget);

}  // namespace kfh
