#include "kfh/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kfh {

void BraidWord::validate() const {
  if (strands < 1) throw LinkError("braid: strands must be >= 1");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands)
      throw LinkError("braid: letter " + std::to_string(g) + " out of range for " +
                      std::to_string(strands) + " strands");
}

int BraidWord::exponent_sum() const {
  int e = 0;
  for (int g : word) e += g > 0 ? 1 : -1;
  return e;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  os << strands << ":";
  for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  return os.str();
}

void TwistFamilySpec::validate() const {
  base.validate();
  if (site < 0 || size_t(site) >= base.word.size())
    throw LinkError("twist family: site index out of range");
  if (base.word[size_t(site)] <= 0) throw LinkError("twist family: site must be a positive letter");
}

void MutantPairSpec::validate() const {
  if (outer.strands != 4 || inner.strands != 4)
    throw LinkError("mutant pair: outer and inner must be 4-strand words");
  outer.validate();
  inner.validate();
}

BraidWord insert_twists(const TwistFamilySpec& spec, int n, int* site_out) {
  spec.validate();
  BraidWord out{spec.base.strands, {}};
  int g = spec.base.word[size_t(spec.site)];
  int site = -1;
  for (size_t i = 0; i < spec.base.word.size(); ++i) {
    if (int(i) != spec.site) {
      out.word.push_back(spec.base.word[i]);
      continue;
    }
    if (n != 0) site = int(out.word.size());
    for (int j = 0; j < std::abs(n); ++j) out.word.push_back(n > 0 ? g : -g);
  }
  if (site_out) *site_out = site;
  return out;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord m = b;
  for (int& g : m.word) g = -g;
  return m;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  b.validate();
  std::vector<int> at(size_t(b.strands));  // at[pos] = starting position of the strand there
  std::iota(at.begin(), at.end(), 0);
  for (int g : b.word) {
    int i = std::abs(g) - 1;
    std::swap(at[size_t(i)], at[size_t(i + 1)]);
  }
  std::vector<int> perm(size_t(b.strands));
  for (int pos = 0; pos < b.strands; ++pos) perm[size_t(at[size_t(pos)])] = pos;
  return perm;
}

std::vector<int> braid_closure_components(const BraidWord& b) {
  auto perm = braid_permutation(b);
  std::vector<int> comp(perm.size(), -1);
  int next = 0;
  for (size_t p = 0; p < perm.size(); ++p) {
    if (comp[p] >= 0) continue;
    for (size_t q = p; comp[q] < 0; q = size_t(perm[q])) comp[q] = next;
    ++next;
  }
  return comp;
}

int braid_component_count(const BraidWord& b) {
  auto c = braid_closure_components(b);
  int m = 0;
  for (int x : c) m = std::max(m, x + 1);
  return m;
}

BraidWord rotate_tangle(const BraidWord& inner) {
  BraidWord r{inner.strands, {}};
  for (auto it = inner.word.rbegin(); it != inner.word.rend(); ++it) {
    int g = *it;
    int i = std::abs(g);
    int j = inner.strands - i;
    r.word.push_back(g > 0 ? j : -j);
  }
  return r;
}

}  // namespace kfh
