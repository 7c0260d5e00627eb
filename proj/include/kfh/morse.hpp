#pragma once
// Rectilinear (Morse-word) link diagrams flowing left to right, turned into grids.
// A word is a sequence of cups, caps and crossings acting on strand positions
// numbered from the top. Each element becomes one grid column.

#include <utility>
#include <vector>

#include "kfh/braid.hpp"
#include "kfh/grid.hpp"

namespace kfh {

struct MorseElement {
  enum Kind { Cup, Cap, Cross };
  Kind kind = Cross;
  int pos = 0;   // positions pos and pos+1
  int sign = 1;  // crossings only: +1 top strand passes over going down
  // crossings only: +1 both strands run left to right here, -1 right to left, 0 free
  int hint = 0;
};

struct MorseGrid {
  GridDiagram grid;
  // (column, row) of each Cross element, in word order
  std::vector<std::pair<int, int>> crossing_sites;
  // some hinted crossing could not be oriented as asked
  bool orientation_conflict = false;
};

MorseGrid morse_to_grid(const std::vector<MorseElement>& word);

// closure of a braid drawn as s nested cups, the braid on the lower strands, s nested caps
std::vector<MorseElement> braid_closure_word(const BraidWord& b);

// braid closure as a grid of size at most strands + letters + 1
GridDiagram braid_to_grid(const BraidWord& b);

}  // namespace kfh
