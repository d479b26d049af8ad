#include "inscover/cover.hpp"

#include "inscover/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace inscover {

std::string_view to_string(CoverMode mode) {
  return mode == CoverMode::sequence ? "sequence" : "turan";
}

std::optional<std::uint32_t> CoverInstance::candidate_index(const Word& w) const {
  if (mode == CoverMode::sequence) {
    if (w.size() != static_cast<std::size_t>(r) || !w.all_below(n)) return std::nullopt;
    return static_cast<std::uint32_t>(w.rank(n));
  }
  auto it = std::lower_bound(candidates.begin(), candidates.end(), w);
  if (it == candidates.end() || *it != w) return std::nullopt;
  return static_cast<std::uint32_t>(it - candidates.begin());
}

namespace {

void guard_size(std::uint64_t rows, std::uint64_t cols, std::uint64_t limit) {
  if (rows != 0 && cols > limit / rows)
    throw ResourceLimitError("incidence of " + std::to_string(rows) + " x " +
                             std::to_string(cols) + " bits exceeds the limit of " +
                             std::to_string(limit));
}

void fill_covered_by(CoverInstance& inst) {
  inst.covered_by.assign(inst.num_targets(), {});
  for (std::uint32_t c = 0; c < inst.num_candidates(); ++c)
    inst.covers[c].for_each([&](std::size_t t) { inst.covered_by[t].push_back(c); });
}

}  // namespace

CoverInstance build_incidence(int n, int k, int r, CoverMode mode,
                              std::uint64_t max_incidence_bits) {
  if (r < 1 || r >= k) throw PreconditionError("build_incidence: need 1 <= r < k");
  if (n < 1 || n > kMaxAlphabet) throw PreconditionError("build_incidence: bad alphabet size");

  CoverInstance inst;
  inst.n = n;
  inst.k = k;
  inst.r = r;
  inst.mode = mode;

  if (mode == CoverMode::sequence) {
    const auto num_candidates = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(r));
    const auto num_targets = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(k));
    guard_size(num_candidates, num_targets, max_incidence_bits);
    inst.candidates.reserve(num_candidates);
    for (std::uint64_t i = 0; i < num_candidates; ++i)
      inst.candidates.push_back(Word::unrank(i, n, static_cast<std::size_t>(r)));
    inst.targets.reserve(num_targets);
    for (std::uint64_t i = 0; i < num_targets; ++i)
      inst.targets.push_back(Word::unrank(i, n, static_cast<std::size_t>(k)));
    inst.covers.assign(num_candidates, DynamicBitset(num_targets));
    for (std::uint64_t c = 0; c < num_candidates; ++c)
      for (const auto& a : supersequences(inst.candidates[c], n, static_cast<std::size_t>(k)))
        inst.covers[c].set(a.rank(n));
  } else {
    inst.candidates = k_subsets(n, r);
    inst.targets = k_subsets(n, k);
    guard_size(inst.candidates.size(), inst.targets.size(), max_incidence_bits);
    inst.covers.assign(inst.candidates.size(), DynamicBitset(inst.targets.size()));
    for (std::size_t t = 0; t < inst.targets.size(); ++t)
      for (const auto& sub : deletion_ball(inst.targets[t], static_cast<std::size_t>(r)))
        inst.covers[*inst.candidate_index(sub)].set(t);
  }
  fill_covered_by(inst);
  return inst;
}

CoverCheck verify_cover(const Code& c, int k) {
  const int n = c.alphabet_size();
  const int r = c.word_length();
  if (k <= r) throw PreconditionError("verify_cover: need k > r");
  const auto universe = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(k));
  if (universe > kDefaultMaxIncidenceBits)
    throw ResourceLimitError("verify_cover: [n]^k too large to enumerate");

  std::vector<bool> covered(universe, false);
  for (const auto& x : c) {
    if (k == r + 1) {
      for (const auto& a : insertion_ball(x, n)) covered[a.rank(n)] = true;
    } else {
      for (const auto& a : supersequences(x, n, static_cast<std::size_t>(k))) covered[a.rank(n)] = true;
    }
  }
  auto it = std::find(covered.begin(), covered.end(), false);
  if (it == covered.end()) return {true, std::nullopt};
  return {false, Word::unrank(static_cast<std::uint64_t>(it - covered.begin()), n,
                              static_cast<std::size_t>(k))};
}

CoverCheck verify_turan(const TuranSystem& t, int k) {
  const int r = t.set_size();
  if (k <= r) throw PreconditionError("verify_turan: need k > r");
  for (const auto& target : k_subsets(t.ground_size(), k)) {
    bool hit = false;
    for (const auto& sub : deletion_ball(target, static_cast<std::size_t>(r))) {
      if (t.contains(sub)) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, target};
  }
  return {true, std::nullopt};
}

CoverSolution make_solution(const CoverInstance& instance,
                            std::span<const std::uint32_t> selection) {
  if (instance.mode == CoverMode::sequence) {
    Code code(instance.n, instance.r);
    for (auto c : selection) code.insert(instance.candidates[c]);
    return code;
  }
  TuranSystem system(instance.n, instance.r);
  for (auto c : selection) system.insert(instance.candidates[c]);
  return system;
}

std::vector<std::uint32_t> greedy_cover_indices(const CoverInstance& instance) {
  DynamicBitset uncovered(instance.num_targets(), true);
  std::vector<std::uint32_t> chosen;
  while (uncovered.any()) {
    std::size_t best_gain = 0;
    std::uint32_t best = 0;
    for (std::uint32_t c = 0; c < instance.num_candidates(); ++c) {
      const auto gain = instance.covers[c].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw PreconditionError("greedy_cover: instance is infeasible");
    chosen.push_back(best);
    uncovered.subtract(instance.covers[best]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

CoverSolution greedy_cover(const CoverInstance& instance) {
  return make_solution(instance, greedy_cover_indices(instance));
}

std::size_t solution_size(const CoverSolution& solution) {
  return std::visit([](const auto& s) { return s.size(); }, solution);
}

CoverCheck verify_solution(const CoverSolution& solution, int k) {
  if (const auto* code = std::get_if<Code>(&solution)) return verify_cover(*code, k);
  return verify_turan(std::get<TuranSystem>(solution), k);
}

std::optional<std::pair<Word, Word>> packing_conflict(const Code& c) {
  if (c.word_length() < 1) throw PreconditionError("packing_conflict: empty words");
  const auto len = static_cast<std::size_t>(c.word_length()) - 1;
  std::map<Word, Word> owner;
  std::optional<std::pair<Word, Word>> first;
  for (const auto& a : c)
    for (const auto& x : deletion_ball(a, len)) {
      auto [it, fresh] = owner.emplace(x, a);
      if (!fresh && it->second != a) {
        std::pair<Word, Word> hit{it->second, a};
        if (!first || hit < *first) first = hit;
      }
    }
  return first;
}

}  // namespace inscover
