#pragma once

// Exact finite checks of the inequalities behind the density lower bounds:
// the inverse Bonferroni inequality over a tree, its star strengthening, and
// the kernel/petal/residue decomposition of [n]^(r+1) induced by a code.
// All measures are exact rationals.

#include "inscover/bitset.hpp"
#include "inscover/rational.hpp"
#include "inscover/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace inscover {

using Edge = std::pair<int, int>;  // 0-based set indices

// Sets C_0..C_{k-1} over a finite ground set with a probability weight per
// element.
struct WeightedSetSystem {
  int ground_size = 0;
  std::vector<Rational> weights;
  std::vector<DynamicBitset> sets;

  static WeightedSetSystem uniform(int ground_size, std::vector<DynamicBitset> sets);

  std::size_t num_sets() const noexcept { return sets.size(); }
  Rational measure(const DynamicBitset& members) const;

  // Throws PreconditionError unless weights are nonnegative, sum to 1 and
  // every set has ground_size bits.
  void validate() const;
  std::string describe() const;
};

struct BonferroniCheck {
  bool holds = false;
  Rational lhs;  // measure of the union
  Rational rhs;  // sum of set measures minus the tree-edge intersections
  explicit operator bool() const noexcept { return holds; }
};

// Throws PreconditionError unless the edges form a spanning tree on the sets.
BonferroniCheck bonferroni_check(const WeightedSetSystem& s, std::span<const Edge> tree_edges);

struct StarBonferroniCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;       // includes the -lambda(R_center) term
  Rational residue;   // lambda(R_center)
  Rational slack;     // rhs - lhs
  explicit operator bool() const noexcept { return holds; }
};

// R_center: elements lying in at least two sets but not in set `center`.
StarBonferroniCheck star_bonferroni_check(const WeightedSetSystem& s, int center);

std::vector<Edge> star_edges(int k, int center);

// Tree on k vertices decoded from a Prüfer sequence of length k-2.
std::vector<Edge> prufer_tree(std::span<const int> sequence, int k);

// C_1..C_{r+1} over [n]^(r+1) with the uniform measure: C_i holds the words
// whose i-th deletion lies in c. Ground elements are indexed by word rank.
WeightedSetSystem deletion_system(const Code& c);

struct AtomProfile {
  int n = 0;
  int r = 0;
  Rational density;
  Rational kernel;                          // t = r+1
  std::vector<Rational> petals;             // t = 1, by the single coordinate
  Rational residue;                         // 1 < t <= r
  std::vector<Rational> residue_complements;  // R minus C_j
  std::vector<std::uint64_t> histogram;     // index t = 0..r+1
  std::uint64_t total_multiplicity = 0;     // sum of t(a)

  std::uint64_t universe() const;
};

// Multiplicity t(a) = #{i : a with coordinate i deleted is in c}, aggregated.
// Throws NotCoveringError when some a has t(a) = 0.
AtomProfile atom_profile(const Code& c);

struct InequalityCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  explicit operator bool() const noexcept { return holds; }
};

// lambda(R) <= r(r+1)(1 - lambda)(lambda - 1/r)
InequalityCheck check_residue_bound(const AtomProfile& p);

// lambda(R_j) <= (1 - lambda)(r lambda - 1), one entry per j.
std::vector<InequalityCheck> check_residue_complements(const AtomProfile& p);

// (1 - lambda)(r lambda - 1) >= 0
InequalityCheck check_density_floor(const AtomProfile& p);

struct PairwiseCheck {
  bool holds = false;           // every pair i < j
  bool adjacent_holds = false;  // pairs (i, i+1) only
  Rational square;              // lambda(C)^2
  Rational min_intersection;
  std::optional<Edge> worst_pair;  // pair attaining min_intersection
  explicit operator bool() const noexcept { return holds; }
};

// lambda(C_i n C_j) >= lambda(C)^2 for i < j. The Cauchy-Schwarz argument
// only needs C_i and C_j to share the retained coordinates, which holds for
// adjacent i, j; non-adjacent pairs are reported separately because finite
// codes can violate them.
PairwiseCheck check_pairwise_intersections(const Code& c);

struct FuzzOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  bool star = false;  // star trees with the residue term instead of random trees
  int threads = 1;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> first_violation;  // full system dump
};

// Random systems: ground size 1..32, k in 2..8, membership probability drawn
// per trial from {0.1, ..., 0.9}, uniform weights, tree from a random Prüfer
// sequence. Trial i uses its own generator seeded from (seed, i), so the
// report does not depend on the thread count.
FuzzReport bonferroni_fuzz(const FuzzOptions& options);

}  // namespace inscover
