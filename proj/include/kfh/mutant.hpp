#pragma once
// Two-tangle links L_{k,l} and their mutants.
//
// A 4-strand word Y becomes a 2-in/2-out tangle [Y] = cup . Y . cap: the middle two
// strands are born before Y and die after it. The two tangles and two twist regions are
// strung along a pair of strands whose ends are joined by arcs over the top and under
// the bottom:
//   L_{k,l} = closure of [outer] . s^k . [inner] . s^l
// where s is a crossing between the two through strands.

#include <vector>

#include "kfh/braid.hpp"
#include "kfh/grid.hpp"
#include "kfh/morse.hpp"

namespace kfh {

enum class Mutation {
  RotateZ,   // in-plane half turn: sigma_i -> sigma_{4-i}, order reversed
  FlipH,     // half turn about the horizontal axis: sigma_i -> sigma_{4-i}, order kept
  ReverseV,  // half turn about the vertical axis: order reversed only
};

constexpr Mutation kDefaultMutation = Mutation::FlipH;

const char* mutation_name(Mutation m);
BraidWord mutate_tangle(const BraidWord& inner, Mutation m);

std::vector<MorseElement> two_tangle_word(const BraidWord& outer, const BraidWord& inner, int k, int l);

struct MutantMember {
  std::vector<MorseElement> word;
  GridDiagram grid;  // simplified
  int components = 0;
  int crossings = 0;
  bool antiparallel = false;  // twist strands could not both run rightward
};

struct MutantPair {
  MutantMember first;   // L_{k,l}
  MutantMember second;  // inner replaced by its mutation
  Mutation mutation = kDefaultMutation;
};

MutantMember build_two_tangle(const BraidWord& outer, const BraidWord& inner, int k, int l);
MutantPair build_mutant_pair(const MutantPairSpec& spec, Mutation m = kDefaultMutation);

}  // namespace kfh
