#pragma once

// Covering instances shared by the sequence problem (codes in [n]^r covering
// [n]^k by the subsequence relation) and the Turán problem (r-subsets of [n]
// covering k-subsets by inclusion), plus verification and the greedy
// baseline.

#include "inscover/bitset.hpp"
#include "inscover/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace inscover {

enum class CoverMode { sequence, turan };

std::string_view to_string(CoverMode mode);

inline constexpr std::uint64_t kDefaultMaxIncidenceBits = std::uint64_t{1} << 32;

// Bipartite incidence between candidates (length-r words or r-subsets) and
// targets (length-k words or k-subsets). Both sides are indexed in
// lexicographic order; in sequence mode the index of a word is its base-n
// rank. Immutable after construction.
struct CoverInstance {
  int n = 0;
  int k = 0;
  int r = 0;
  CoverMode mode = CoverMode::sequence;

  std::vector<Word> targets;
  std::vector<Word> candidates;
  // covers[c] has bit t set iff candidate c covers target t.
  std::vector<DynamicBitset> covers;
  // covered_by[t] lists the candidates covering t, ascending.
  std::vector<std::vector<std::uint32_t>> covered_by;

  std::size_t num_targets() const noexcept { return targets.size(); }
  std::size_t num_candidates() const noexcept { return candidates.size(); }

  // Index of a candidate word (sorted subset in Turán mode); nullopt if the
  // word is not a candidate.
  std::optional<std::uint32_t> candidate_index(const Word& w) const;
};

// Throws PreconditionError for r >= k or bad sizes, ResourceLimitError when
// candidates * targets exceeds max_incidence_bits.
CoverInstance build_incidence(int n, int k, int r, CoverMode mode,
                              std::uint64_t max_incidence_bits = kDefaultMaxIncidenceBits);

// Outcome of a coverage check. `witness` holds the lexicographically least
// uncovered target when coverage fails.
struct CoverCheck {
  bool covered = false;
  std::optional<Word> witness;

  explicit operator bool() const noexcept { return covered; }
};

// Does every word of [n]^k contain some word of c as a subsequence?
CoverCheck verify_cover(const Code& c, int k);

// Does every k-subset of [n] contain some member of t? Vacuous for n < k.
CoverCheck verify_turan(const TuranSystem& t, int k);

using CoverSolution = std::variant<Code, TuranSystem>;

// Materializes a selection of candidate indices as a Code (sequence mode) or
// a TuranSystem (Turán mode).
CoverSolution make_solution(const CoverInstance& instance,
                            std::span<const std::uint32_t> selection);

// Repeatedly takes the candidate covering the most uncovered targets, ties
// to the least index. Returns ascending candidate indices.
std::vector<std::uint32_t> greedy_cover_indices(const CoverInstance& instance);

CoverSolution greedy_cover(const CoverInstance& instance);

std::size_t solution_size(const CoverSolution& solution);

// verify_cover / verify_turan on whichever alternative is held.
CoverCheck verify_solution(const CoverSolution& solution, int k);

// First pair (in lexicographic order) of distinct words of c sharing a
// subsequence of length word_length-1; nullopt when c is a 1-packing.
std::optional<std::pair<Word, Word>> packing_conflict(const Code& c);

}  // namespace inscover
