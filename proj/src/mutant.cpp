#include "kfh/mutant.hpp"

#include <cstdlib>

namespace kfh {

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::RotateZ: return "rotate-z";
    case Mutation::FlipH: return "flip-h";
    case Mutation::ReverseV: return "reverse-v";
  }
  return "?";
}

BraidWord mutate_tangle(const BraidWord& inner, Mutation m) {
  if (inner.strands != 4) throw LinkError("tangle words must have 4 strands");
  if (m == Mutation::RotateZ) return rotate_tangle(inner);
  BraidWord r{4, {}};
  if (m == Mutation::FlipH) {
    for (int g : inner.word) r.word.push_back(g > 0 ? 4 - g : -(4 + g));
  } else {
    r.word.assign(inner.word.rbegin(), inner.word.rend());
  }
  return r;
}

// the tangle occupies strand positions 1..4 while it is open
static void push_tangle(std::vector<MorseElement>& w, const BraidWord& y) {
  w.push_back({MorseElement::Cup, 2, 1, 0});
  for (int g : y.word) w.push_back({MorseElement::Cross, std::abs(g), g > 0 ? 1 : -1, 0});
  w.push_back({MorseElement::Cap, 2, 1, 0});
}

static void push_twists(std::vector<MorseElement>& w, int k) {
  for (int i = 0; i < std::abs(k); ++i) w.push_back({MorseElement::Cross, 1, k > 0 ? 1 : -1, 1});
}

std::vector<MorseElement> two_tangle_word(const BraidWord& outer, const BraidWord& inner, int k, int l) {
  if (outer.strands != 4 || inner.strands != 4) throw LinkError("tangle words must have 4 strands");
  outer.validate();
  inner.validate();
  std::vector<MorseElement> w;
  w.push_back({MorseElement::Cup, 0, 1, 0});
  w.push_back({MorseElement::Cup, 2, 1, 0});
  push_tangle(w, outer);
  push_twists(w, k);
  push_tangle(w, inner);
  push_twists(w, l);
  w.push_back({MorseElement::Cap, 2, 1, 0});
  w.push_back({MorseElement::Cap, 0, 1, 0});
  return w;
}

MutantMember build_two_tangle(const BraidWord& outer, const BraidWord& inner, int k, int l) {
  MutantMember m;
  m.word = two_tangle_word(outer, inner, k, l);
  MorseGrid mg = morse_to_grid(m.word);
  m.antiparallel = mg.orientation_conflict;
  m.grid = simplify_grid(mg.grid, 4 * mg.grid.n + 16);
  m.components = grid_component_count(m.grid);
  m.crossings = int(outer.word.size() + inner.word.size()) + std::abs(k) + std::abs(l);
  return m;
}

MutantPair build_mutant_pair(const MutantPairSpec& spec, Mutation mut) {
  spec.validate();
  MutantPair p;
  p.mutation = mut;
  p.first = build_two_tangle(spec.outer, spec.inner, spec.k, spec.l);
  p.second = build_two_tangle(spec.outer, mutate_tangle(spec.inner, mut), spec.k, spec.l);
  return p;
}

}  // namespace kfh
