#pragma once
// Family-level checks on knot Floer homology: stabilization under twisting, the split
// skein sequence, and mutant comparisons.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kfh/alexander.hpp"
#include "kfh/braid.hpp"
#include "kfh/hfk.hpp"
#include "kfh/json_io.hpp"
#include "kfh/mutant.hpp"

namespace kfh {

struct ExperimentOptions {
  HfkOptions hfk;
  // compute A >= 0 only and fill in the rest by the symmetry of HFK-hat
  bool use_symmetry = true;
};

// HFK-hat of a grid, optionally from the upper half
BigradedRanks link_hfk(const GridDiagram& g, const ExperimentOptions& opt);

// one Alexander slice A = j as a table with A2 = 2j
BigradedRanks slice(const BigradedRanks& r, int j);

struct StabilizationCheck {
  int n = 0;
  bool part1_checked = false;
  bool part1_pass = false;
  int part1_k = -1;  // largest k passing against L_{n+2}
  bool part3_checked = false;
  bool part3_pass = false;
  bool part2_checked = false;
  bool part2_pass = false;
};

struct Decomposition {
  int n0 = 0;
  int k = 0;  // n0 + 1
  BigradedRanks F_circ, F_bullet, A_hat, B_hat;
};

struct StabilizationReport {
  bool stable = false;
  bool all_pass = false;
  int k_observed = 0;
  int first_stable_n = 0;
  std::vector<StabilizationCheck> per_n;
  std::optional<Decomposition> decomposition;
  std::map<int, BigradedRanks> hfk;
  std::map<int, std::string> unavailable;  // n -> reason
};

// the direct sum predicted for L_n from the slices of L_{n0}
BigradedRanks decomposition_prediction(const Decomposition& d, int n);

StabilizationReport verify_stabilization(const TwistFamilySpec& spec, Interval range,
                                         const ExperimentOptions& opt = {});

struct SkeinSplitReport {
  int n = 0;
  bool inequality = false;
  bool equality = false;
  bool same_component = false;  // strands at the twist crossing of L_{n+1}
  bool v_on_middle = false;      // V was tensored onto L_n
  BigradedRanks lhs, rhs;
  std::string error;
};

SkeinSplitReport verify_skein_split(const TwistFamilySpec& spec, int n, const ExperimentOptions& opt = {});

enum class MutantCheck { Alexander, Hfk, Genus, Tau, Delta, Flype };
const char* mutant_check_name(MutantCheck c);
std::set<MutantCheck> all_mutant_checks();

struct MutantEntry {
  int n = 0;
  int components = 0;
  int grid_size_first = 0, grid_size_second = 0;
  std::map<MutantCheck, bool> equal;  // checks that were run
  std::map<MutantCheck, std::string> skipped;
  HalfLaurent alexander_first, alexander_second;
  BigradedRanks hfk_first, hfk_second;
};

struct MutantReport {
  Mutation mutation = kDefaultMutation;
  std::vector<MutantEntry> entries;
  // smallest t >= 0 with HFK equality at every computed n with |n| >= t
  int hfk_threshold = 0;
  bool alexander_all_equal = true;
  bool flype_all_equal = true;
  std::map<int, std::string> unavailable;
};

// member n is L_{k+n,l} against its mutant
MutantReport compare_mutants(const MutantPairSpec& spec, Interval range, const std::set<MutantCheck>& checks,
                             const ExperimentOptions& opt = {}, Mutation m = kDefaultMutation);

Json to_json(const StabilizationReport& r);
Json to_json(const SkeinSplitReport& r);
Json to_json(const MutantReport& r);

}  // namespace kfh
