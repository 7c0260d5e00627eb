#pragma once
// Braid words, twist families and mutant-pair descriptors.

#include <stdexcept>
#include <string>
#include <vector>

namespace kfh {

struct LinkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// g > 0 is sigma_g, g < 0 its inverse; |g| < strands.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  void validate() const;
  int exponent_sum() const;
  std::string str() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// L_1 = base; L_n replaces word[site] by n copies of it (|n| inverse copies for n < 0).
struct TwistFamilySpec {
  BraidWord base;
  int site = 0;
  void validate() const;
};

// L_{k,l}: twist regions of k and l half-twists on either side of the tangle built
// from `inner`, closed up through the tangle built from `outer`.
struct MutantPairSpec {
  BraidWord outer;
  BraidWord inner;
  int k = 0;
  int l = 0;
  void validate() const;
};

// Optional site_out receives the index of a letter of the twist region (-1 when n == 0).
BraidWord insert_twists(const TwistFamilySpec& spec, int n, int* site_out = nullptr);

BraidWord mirror(const BraidWord& b);

// perm[p] = position at the bottom of the strand that starts at position p.
std::vector<int> braid_permutation(const BraidWord& b);

// closure component of each starting position, numbered in order of first appearance
std::vector<int> braid_closure_components(const BraidWord& b);
int braid_component_count(const BraidWord& b);

// 180-degree rotation of a 4-strand tangle word: sigma_i -> sigma_{4-i}, order reversed.
BraidWord rotate_tangle(const BraidWord& inner);

}  // namespace kfh
