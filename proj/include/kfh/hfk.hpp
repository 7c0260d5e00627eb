#pragma once
// Grid homology over GF(2): states, gradings, the tilde complex, HFK-hat ranks and tau.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kfh/grid.hpp"
#include "kfh/poly.hpp"

namespace kfh {

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// state encoding: 4 bits per column, column 0 most significant
using StateCode = std::uint64_t;
constexpr int kMaxGridSize = 16;

StateCode encode_state(const std::vector<int>& match);
std::vector<int> decode_state(StateCode code, int n);

struct GridState {
  std::vector<int> match;  // column -> row of the state point
  int M = 0;
  int A2 = 0;
};

struct Window {
  int lo = 0;  // inclusive bounds on A2
  int hi = 0;
};

struct HfkOptions {
  std::int64_t max_states = 50000000;
  std::optional<Window> a2_window;  // restrict the tilde computation to these A2 blocks
  int threads = 1;
};

// Precomputed per-grid grading data.
class Gradings {
 public:
  explicit Gradings(const GridDiagram& g);
  int n() const { return n_; }
  int components() const { return l_; }
  // A2 contribution of the state point in column i at row j
  int a2_term(int i, int j) const { return a2_term_[size_t(i * n_ + j)]; }
  int o_term(int i, int j) const { return o_term_[size_t(i * n_ + j)]; }
  int a2_const() const { return a2_const_; }
  int m_const() const { return m_const_; }
  int M(const std::vector<int>& match) const;
  int A2(const std::vector<int>& match) const;
  const GridDiagram& grid() const { return g_; }

 private:
  GridDiagram g_;
  int n_ = 0, l_ = 0;
  std::vector<int> a2_term_, o_term_;
  int a2_const_ = 0, m_const_ = 0;
};

// Number of states in each A2 block (exact, by dynamic programming over row subsets).
std::map<int, std::int64_t> state_counts_by_a2(const Gradings& gr);

// All states (or those with A2 in the window), grouped by A2, each group sorted by code.
struct StateBlock {
  int A2 = 0;
  std::vector<StateCode> codes;
  std::vector<int> M;
};
std::vector<StateBlock> enumerate_states(const Gradings& gr, std::optional<Window> window,
                                         std::int64_t max_states);

// Generators bucketed by bigrading; boundary columns index generators of the same complex.
struct SparseComplexGF2 {
  int n = 0;
  int l = 0;
  bool filtered = false;
  std::vector<StateCode> gens;
  std::vector<int> M, A2;
  // boundary of generator i: indices into gens
  std::vector<std::uint32_t> col_start;
  std::vector<std::uint32_t> entries;
  std::vector<std::uint32_t> column(size_t i) const {
    return {entries.begin() + col_start[i], entries.begin() + col_start[i + 1]};
  }
  size_t size() const { return gens.size(); }
};

// graded tilde complex (rectangles avoiding all markers); optional window on A2
SparseComplexGF2 tilde_complex(const GridDiagram& g, const HfkOptions& opt = {});
// filtered complex: rectangles avoid O markers only
SparseComplexGF2 filtered_complex(const GridDiagram& g, const HfkOptions& opt = {});

struct BigradedRanks {
  std::map<std::pair<int, int>, std::int64_t> ranks;  // (M, A2) -> rank, no zero entries
  int l = 1;
  int n = 0;
  std::string name;
  bool completed_by_symmetry = false;

  std::int64_t at(int M, int A2) const;
  void add(int M, int A2, std::int64_t r);
  std::int64_t total() const;
  friend bool operator==(const BigradedRanks& a, const BigradedRanks& b) { return a.ranks == b.ranks; }
};

BigradedRanks homology_ranks(const SparseComplexGF2& c, int threads = 1);

// Graded Euler characteristic sum (-1)^M t^(A2/2) rk.
HalfLaurent euler_characteristic(const BigradedRanks& r);
// tensor product of rank tables
BigradedRanks tensor(const BigradedRanks& a, const BigradedRanks& b);
BigradedRanks shifted(const BigradedRanks& r, int dM, int dA2);
BigradedRanks direct_sum(const BigradedRanks& a, const BigradedRanks& b);
// divides out one copy of W; nullopt when inexact
std::optional<BigradedRanks> divide_by_W(const BigradedRanks& r);

struct StandardSpaces {
  static BigradedRanks V();
  static BigradedRanks W();
};

// rk_M(A) == rk_{M-2A}(-A) for every entry
bool is_symmetric(const BigradedRanks& r);
// ranks with A2 >= 0 mirrored to A2 < 0 by the symmetry above
BigradedRanks complete_by_symmetry(const BigradedRanks& upper);

struct HfkResult {
  BigradedRanks hfk;
  BigradedRanks tilde;
  std::int64_t states = 0;
  bool windowed = false;
};
// HFK-hat of the link presented by g. With a window, only A2 in [lo, top] is computed;
// when lo <= 0 the negative half is filled in by symmetry.
HfkResult hfk_hat(const GridDiagram& g, const HfkOptions& opt = {});

// top Alexander grading (A, not A2) with nonzero HFK-hat, computed block by block from the top
struct GenusResult {
  int genus = 0;
  BigradedRanks top;  // HFK-hat restricted to the computed blocks
};
GenusResult top_alexander_grading(const GridDiagram& g, const HfkOptions& opt = {});

int tau(const GridDiagram& knot, const HfkOptions& opt = {});

struct DerivedInvariants {
  int genus = 0;                        // max A with nonzero rank
  std::map<int, std::int64_t> delta2;  // 2M - A2 -> total rank
  bool thin = false;
};
DerivedInvariants derived_invariants(const BigradedRanks& r);

}  // namespace kfh
