#pragma once

// Exact optimization over covering instances: S(n,k,r) (minimum covering
// code), T(n,k,r) (minimum Turán system) and P(n,r+1,r) (maximum 1-packing),
// with optimality certificates and enumeration of optimal codes up to
// symmetry.

#include "inscover/cover.hpp"
#include "inscover/words.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace inscover {

enum class SolveStatus {
  proved_optimal,  // the search completed; `bound` equals `optimum`
  best_known,      // budget exhausted; `optimum` is the incumbent
};

enum class ProblemKind { cover, turan, packing };

std::string_view to_string(SolveStatus status);
std::string_view to_string(ProblemKind kind);

struct SolveOptions {
  double time_budget_seconds = 300.0;
  unsigned threads = 1;
  // Partial solutions up to this many picks are reduced modulo the symmetry
  // group of the instance. 0 disables isomorph rejection.
  int isomorph_depth = 2;
  std::uint64_t max_incidence_bits = kDefaultMaxIncidenceBits;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SolveResult {
  ProblemKind kind;
  int n;
  int k;
  int r;
  std::size_t optimum;
  // Packing solutions are stored as a Code of length-(r+1) words.
  CoverSolution solution;
  SolveStatus status;
  // Minimization: the best proven lower bound. Packing: the best proven
  // upper bound. Equal to `optimum` when proved optimal.
  std::size_t bound;
  SolveStats stats;
};

// Branch and bound on a prebuilt instance. The reported solution depends
// only on the instance and `isomorph_depth`, never on `threads`.
SolveResult solve_min_cover(const CoverInstance& instance, const SolveOptions& options = {});

// Greedy baseline wrapped as a SolveResult (best_known unless the greedy size
// meets the root lower bound).
SolveResult solve_greedy(const CoverInstance& instance);

SolveResult min_cover(int n, int k, int r, const SolveOptions& options = {});
SolveResult min_turan(int n, int k, int r, const SolveOptions& options = {});

// Maximum set of length-(r+1) words over [n] whose deletion balls (length-r
// subsequences) are pairwise disjoint. Solved as a maximum clique in the
// compatibility graph; single-threaded.
SolveResult max_packing(int n, int r, const SolveOptions& options = {});

// Admissible lower bound on the number of additional candidates needed to
// cover the whole instance; the root bound used by the search.
std::size_t root_lower_bound(const CoverInstance& instance);

// One canonical representative per equivalence class of optimum-size
// covering codes. Throws ResourceLimitError if the optimum cannot be proved
// within the budget or more than `max_solutions` optimal codes exist.
std::vector<Code> enumerate_optimal(int n, int k, int r,
                                    SymmetryGroup group = SymmetryGroup::symbol_permutations,
                                    const SolveOptions& options = {},
                                    std::size_t max_solutions = 1'000'000);

}  // namespace inscover
