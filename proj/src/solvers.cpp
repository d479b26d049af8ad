#include "inscover/solvers.hpp"

#include "inscover/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace inscover {

std::string_view to_string(SolveStatus status) {
  return status == SolveStatus::proved_optimal ? "proved_optimal" : "best_known";
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::cover: return "cover";
    case ProblemKind::turan: return "turan";
    case ProblemKind::packing: return "packing";
  }
  return "cover";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();
constexpr std::uint32_t kExternalSubtree = 0xFFFFFFFFu;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Symmetry group of an instance acting on candidate indices.
class CandidateGroup {
 public:
  CandidateGroup(const CoverInstance& inst, bool with_reversal) : inst_(inst) {
    std::vector<Symbol> perm(static_cast<std::size_t>(inst.n));
    std::iota(perm.begin(), perm.end(), Symbol{0});
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    reversal_ = with_reversal && inst.mode == CoverMode::sequence;
  }

  // Least sorted image of `chosen` over the group.
  std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& chosen) const {
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> image(chosen.size());
    std::vector<Symbol> buffer(static_cast<std::size_t>(inst_.r));
    for (const auto& perm : perms_) {
      for (int rev = 0; rev < (reversal_ ? 2 : 1); ++rev) {
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          const Word& w = inst_.candidates[chosen[i]];
          for (std::size_t j = 0; j < w.size(); ++j) buffer[j] = perm[w[j]];
          if (rev) std::reverse(buffer.begin(), buffer.end());
          if (inst_.mode == CoverMode::turan) std::sort(buffer.begin(), buffer.end());
          image[i] = *inst_.candidate_index(Word(buffer));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
      }
    }
    return best;
  }

 private:
  const CoverInstance& inst_;
  std::vector<std::vector<Symbol>> perms_;
  bool reversal_ = false;
};

struct Bound {
  std::size_t value = 0;      // kInfeasible when some target has no candidate left
  std::size_t branch_target = 0;
};

// Lower bound on the picks still needed to cover `uncovered` using only
// candidates outside `excluded`: the larger of (a) the fewest residual
// degrees summing to |uncovered| and (b) a greedy set of uncovered targets
// with pairwise disjoint candidate sets. Also selects the branching target:
// fewest available candidates, ties to the least index.
Bound lower_bound(const CoverInstance& inst, const DynamicBitset& uncovered,
                  const DynamicBitset& excluded, std::vector<std::size_t>& degrees,
                  DynamicBitset& used) {
  Bound out;
  const std::size_t open = uncovered.count();
  if (open == 0) return out;

  degrees.clear();
  for (std::size_t c = 0; c < inst.num_candidates(); ++c) {
    if (excluded.test(c)) continue;
    const auto d = inst.covers[c].count_and(uncovered);
    if (d) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::size_t sum = 0;
  std::size_t by_degree = 0;
  for (auto d : degrees) {
    if (sum >= open) break;
    sum += d;
    ++by_degree;
  }
  if (sum < open) return {kInfeasible, 0};

  std::size_t disjoint = 0;
  std::size_t fewest = kInfeasible;
  if (used.size() != inst.num_candidates())
    used = DynamicBitset(inst.num_candidates());
  else
    used.clear();
  bool infeasible = false;
  uncovered.for_each([&](std::size_t t) {
    if (infeasible) return;
    std::size_t available = 0;
    bool clash = false;
    for (auto c : inst.covered_by[t]) {
      if (excluded.test(c)) continue;
      ++available;
      if (used.test(c)) clash = true;
    }
    if (available == 0) {
      infeasible = true;
      return;
    }
    if (available < fewest) {
      fewest = available;
      out.branch_target = t;
    }
    if (!clash) {
      ++disjoint;
      for (auto c : inst.covered_by[t])
        if (!excluded.test(c)) used.set(c);
    }
  });
  if (infeasible) return {kInfeasible, 0};
  out.value = std::max(by_degree, disjoint);
  return out;
}

struct Subtree {
  std::vector<std::uint32_t> chosen;
  DynamicBitset uncovered;
  DynamicBitset excluded;
};

enum class SearchMode { optimize, enumerate };

// Depth-first branch and bound over subtrees produced by a shallow,
// sequential expansion of the root. The incumbent is ordered by
// (size, subtree index); a subtree only prunes against incumbents from
// earlier subtrees with <= and against later ones with <, so the reported
// solution is the first optimum in depth-first order regardless of how
// subtrees are scheduled.
class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, const SolveOptions& options, SearchMode mode,
              std::size_t target_size, bool group_with_reversal)
      : inst_(inst),
        options_(options),
        mode_(mode),
        target_size_(target_size),
        group_with_reversal_(group_with_reversal) {}

  void seed_incumbent(const std::vector<std::uint32_t>& solution) {
    best_key_.store(key(solution.size(), kExternalSubtree));
    best_solution_ = solution;
  }

  void run() {
    start_ = Clock::now();
    auto subtrees = expand_root();
    std::atomic<std::size_t> next{0};
    const std::size_t max_picks = mode_ == SearchMode::enumerate ? target_size_ : best_size();
    auto work = [&] {
      Worker w(inst_, max_picks);
      for (std::size_t i = next++; i < subtrees.size() && !stop_.load(); i = next++) {
        const auto& sub = subtrees[i];
        w.chosen = sub.chosen;
        w.uncovered[0] = sub.uncovered;
        w.excluded[0] = sub.excluded;
        dfs(w, 0, static_cast<std::uint32_t>(i));
      }
      nodes_ += w.nodes;
    };
    const unsigned threads = std::max(1u, options_.threads);
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    elapsed_ = seconds_since(start_);
  }

  bool completed() const { return !stop_.load(); }
  bool overflowed() const { return overflow_; }
  std::size_t best_size() const { return static_cast<std::size_t>(best_key_.load() >> 32); }
  const std::vector<std::uint32_t>& best_solution() const { return best_solution_; }
  const std::vector<std::vector<std::uint32_t>>& solutions() const { return solutions_; }
  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const { return elapsed_; }

  void set_solution_limit(std::size_t limit) { solution_limit_ = limit; }

 private:
  struct Worker {
    Worker(const CoverInstance& inst, std::size_t max_picks) {
      const std::size_t depth = std::min(inst.num_candidates(), max_picks) + 2;
      uncovered.assign(depth, DynamicBitset(inst.num_targets()));
      excluded.assign(depth, DynamicBitset(inst.num_candidates()));
    }
    std::vector<DynamicBitset> uncovered;
    std::vector<DynamicBitset> excluded;
    std::vector<std::uint32_t> chosen;
    std::vector<std::size_t> degrees;
    DynamicBitset used;
    std::uint64_t nodes = 0;
  };

  static std::uint64_t key(std::size_t size, std::uint32_t subtree) {
    return (static_cast<std::uint64_t>(size) << 32) | subtree;
  }

  bool pruned(std::size_t reachable, std::uint32_t subtree) const {
    if (mode_ == SearchMode::enumerate) return reachable > target_size_;
    return key(reachable, subtree) >= best_key_.load(std::memory_order_relaxed);
  }

  void record(const std::vector<std::uint32_t>& chosen, std::uint32_t subtree) {
    std::lock_guard lock(mutex_);
    if (mode_ == SearchMode::enumerate) {
      if (chosen.size() != target_size_) return;
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      solutions_.push_back(std::move(sorted));
      if (solutions_.size() > solution_limit_) {
        overflow_ = true;
        stop_ = true;
      }
      return;
    }
    const auto k = key(chosen.size(), subtree);
    if (k < best_key_.load()) {
      best_key_.store(k);
      best_solution_ = chosen;
      std::sort(best_solution_.begin(), best_solution_.end());
    }
  }

  void dfs(Worker& w, std::size_t depth, std::uint32_t subtree) {
    if ((++w.nodes & 1023u) == 0 && seconds_since(start_) > options_.time_budget_seconds)
      stop_ = true;
    if (stop_.load(std::memory_order_relaxed)) return;

    const DynamicBitset& uncovered = w.uncovered[depth];
    const DynamicBitset& excluded = w.excluded[depth];
    if (uncovered.none()) {
      record(w.chosen, subtree);
      return;
    }
    const Bound b = lower_bound(inst_, uncovered, excluded, w.degrees, w.used);
    if (b.value == kInfeasible || pruned(w.chosen.size() + b.value, subtree)) return;

    DynamicBitset& next_excluded = w.excluded[depth + 1];
    next_excluded = excluded;
    for (auto c : inst_.covered_by[b.branch_target]) {
      if (excluded.test(c)) continue;
      w.uncovered[depth + 1] = uncovered;
      w.uncovered[depth + 1].subtract(inst_.covers[c]);
      w.chosen.push_back(c);
      dfs(w, depth + 1, subtree);
      w.chosen.pop_back();
      if (stop_.load(std::memory_order_relaxed)) return;
      next_excluded.set(c);
    }
  }

  std::vector<Subtree> expand_root() {
    Subtree root{{}, DynamicBitset(inst_.num_targets(), true),
                 DynamicBitset(inst_.num_candidates())};
    std::vector<Subtree> level{root};
    std::vector<std::size_t> degrees;
    DynamicBitset used;

    const bool iso = options_.isomorph_depth > 0 && inst_.n <= kMaxCanonicalAlphabet;
    if (!iso) {
      // One level of exclusion branching, purely to hand out subtrees.
      const Bound b = lower_bound(inst_, root.uncovered, root.excluded, degrees, used);
      if (root.uncovered.none() || b.value == kInfeasible) return level;
      std::vector<Subtree> next;
      DynamicBitset excluded(inst_.num_candidates());
      for (auto c : inst_.covered_by[b.branch_target]) {
        Subtree s{{c}, root.uncovered, excluded};
        s.uncovered.subtract(inst_.covers[c]);
        next.push_back(std::move(s));
        excluded.set(c);
      }
      return next;
    }

    CandidateGroup group(inst_, group_with_reversal_);
    for (int d = 0; d < options_.isomorph_depth; ++d) {
      std::vector<Subtree> next;
      std::set<std::vector<std::uint32_t>> seen;
      for (const auto& p : level) {
        if (p.uncovered.none()) {
          next.push_back(p);
          continue;
        }
        const Bound b = lower_bound(inst_, p.uncovered, p.excluded, degrees, used);
        if (b.value == kInfeasible) continue;
        for (auto c : inst_.covered_by[b.branch_target]) {
          auto chosen = p.chosen;
          chosen.push_back(c);
          if (!seen.insert(group.canonical(chosen)).second) continue;
          Subtree s{std::move(chosen), p.uncovered, p.excluded};
          s.uncovered.subtract(inst_.covers[c]);
          next.push_back(std::move(s));
        }
      }
      level = std::move(next);
    }
    return level;
  }

  const CoverInstance& inst_;
  const SolveOptions& options_;
  SearchMode mode_;
  std::size_t target_size_;
  bool group_with_reversal_;

  Clock::time_point start_;
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> best_key_{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mutex_;
  std::vector<std::uint32_t> best_solution_;
  std::vector<std::vector<std::uint32_t>> solutions_;
  std::size_t solution_limit_ = std::numeric_limits<std::size_t>::max();
  bool overflow_ = false;
  double elapsed_ = 0.0;
};

ProblemKind kind_of(const CoverInstance& inst) {
  return inst.mode == CoverMode::sequence ? ProblemKind::cover : ProblemKind::turan;
}

std::size_t volume_bound(const CoverInstance& inst) {
  if (inst.mode != CoverMode::sequence || inst.k != inst.r + 1) return 0;
  const std::uint64_t ball = static_cast<std::uint64_t>(inst.r + 1) * static_cast<std::uint64_t>(inst.n - 1) + 1;
  return static_cast<std::size_t>((inst.num_targets() + ball - 1) / ball);
}

}  // namespace

std::size_t root_lower_bound(const CoverInstance& instance) {
  std::vector<std::size_t> degrees;
  DynamicBitset used;
  const Bound b = lower_bound(instance, DynamicBitset(instance.num_targets(), true),
                              DynamicBitset(instance.num_candidates()), degrees, used);
  if (b.value == kInfeasible) throw PreconditionError("instance is infeasible");
  return std::max(b.value, volume_bound(instance));
}

SolveResult solve_min_cover(const CoverInstance& instance, const SolveOptions& options) {
  const std::size_t root = root_lower_bound(instance);
  const auto greedy = greedy_cover_indices(instance);

  CoverSearch search(instance, options, SearchMode::optimize, 0, true);
  search.seed_incumbent(greedy);
  search.run();

  const std::size_t optimum = search.best_size();
  const bool proved = search.completed();
  return SolveResult{kind_of(instance),
                     instance.n,
                     instance.k,
                     instance.r,
                     optimum,
                     make_solution(instance, search.best_solution()),
                     proved || optimum == root ? SolveStatus::proved_optimal : SolveStatus::best_known,
                     proved ? optimum : root,
                     {search.nodes(), search.elapsed()}};
}

SolveResult solve_greedy(const CoverInstance& instance) {
  const auto start = Clock::now();
  const std::size_t root = root_lower_bound(instance);
  const auto greedy = greedy_cover_indices(instance);
  const bool tight = greedy.size() == root;
  return SolveResult{kind_of(instance),
                     instance.n,
                     instance.k,
                     instance.r,
                     greedy.size(),
                     make_solution(instance, greedy),
                     tight ? SolveStatus::proved_optimal : SolveStatus::best_known,
                     root,
                     {0, seconds_since(start)}};
}

SolveResult min_cover(int n, int k, int r, const SolveOptions& options) {
  return solve_min_cover(build_incidence(n, k, r, CoverMode::sequence, options.max_incidence_bits),
                         options);
}

SolveResult min_turan(int n, int k, int r, const SolveOptions& options) {
  return solve_min_cover(build_incidence(n, k, r, CoverMode::turan, options.max_incidence_bits),
                         options);
}

std::vector<Code> enumerate_optimal(int n, int k, int r, SymmetryGroup group,
                                    const SolveOptions& options, std::size_t max_solutions) {
  if (n > kMaxCanonicalAlphabet)
    throw ResourceLimitError("enumerate_optimal: alphabet too large for canonical forms");
  const auto start = Clock::now();
  const CoverInstance inst = build_incidence(n, k, r, CoverMode::sequence, options.max_incidence_bits);
  const SolveResult best = solve_min_cover(inst, options);
  if (best.status != SolveStatus::proved_optimal || best.bound != best.optimum)
    throw ResourceLimitError("enumerate_optimal: optimum not proved within the time budget");

  SolveOptions remaining = options;
  remaining.time_budget_seconds = std::max(0.0, options.time_budget_seconds - seconds_since(start));
  CoverSearch search(inst, remaining, SearchMode::enumerate, best.optimum,
                     group == SymmetryGroup::symbols_and_reversal);
  search.set_solution_limit(max_solutions);
  search.run();
  if (search.overflowed())
    throw ResourceLimitError("enumerate_optimal: more than " + std::to_string(max_solutions) +
                             " optimal codes");
  if (!search.completed())
    throw ResourceLimitError("enumerate_optimal: enumeration exceeded the time budget");

  std::set<Code> classes;
  for (const auto& sol : search.solutions())
    classes.insert(canonical_form(std::get<Code>(make_solution(inst, sol)), group));
  return {classes.begin(), classes.end()};
}

namespace {

// Maximum clique with greedy-colouring bounds (Tomita-style), on bitsets.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<DynamicBitset> adjacency, double budget)
      : adj_(std::move(adjacency)), budget_(budget) {}

  void run(std::vector<std::uint32_t> incumbent) {
    start_ = Clock::now();
    best_ = std::move(incumbent);
    DynamicBitset all(adj_.size(), true);
    root_colours_ = colour_count(all);
    std::vector<std::uint32_t> current;
    expand(all, current);
  }

  bool completed() const { return !stop_; }
  const std::vector<std::uint32_t>& best() const { return best_; }
  std::size_t root_colours() const { return root_colours_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t colour_count(DynamicBitset pool) const {
    std::size_t colours = 0;
    while (pool.any()) {
      ++colours;
      DynamicBitset avail = pool;
      for (auto v = avail.find_first(); v != DynamicBitset::npos; v = avail.find_first()) {
        avail.subtract(adj_[v]);
        avail.reset(v);
        pool.reset(v);
      }
    }
    return colours;
  }

  void expand(DynamicBitset pool, std::vector<std::uint32_t>& current) {
    if ((++nodes_ & 1023u) == 0 && seconds_since(start_) > budget_) stop_ = true;
    if (stop_) return;

    std::vector<std::uint32_t> order;
    std::vector<std::size_t> colour;
    DynamicBitset uncoloured = pool;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      DynamicBitset avail = uncoloured;
      for (auto v = avail.find_first(); v != DynamicBitset::npos; v = avail.find_first()) {
        avail.subtract(adj_[v]);
        avail.reset(v);
        uncoloured.reset(v);
        order.push_back(static_cast<std::uint32_t>(v));
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const auto v = order[i];
      current.push_back(v);
      DynamicBitset next = pool;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      if (stop_) return;
      pool.reset(v);
    }
  }

  std::vector<DynamicBitset> adj_;
  double budget_;
  Clock::time_point start_;
  std::vector<std::uint32_t> best_;
  std::size_t root_colours_ = 0;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

SolveResult max_packing(int n, int r, const SolveOptions& options) {
  if (n < 1 || n > kMaxAlphabet || r < 1) throw PreconditionError("max_packing: need n >= 1, r >= 1");
  const auto start = Clock::now();
  const std::size_t len = static_cast<std::size_t>(r) + 1;
  const auto count = power_checked(static_cast<std::uint64_t>(n), len);
  if (count != 0 && count > options.max_incidence_bits / count)
    throw ResourceLimitError("max_packing: conflict graph exceeds the incidence limit");
  const std::size_t v = static_cast<std::size_t>(count);

  // Two words conflict iff they share a length-r subsequence.
  std::vector<DynamicBitset> conflict(v, DynamicBitset(v));
  const auto shorter = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(r));
  for (std::uint64_t x = 0; x < shorter; ++x) {
    std::vector<std::uint64_t> ball;
    for (const auto& a : insertion_ball(Word::unrank(x, n, static_cast<std::size_t>(r)), n))
      ball.push_back(a.rank(n));
    for (auto a : ball)
      for (auto b : ball) conflict[a].set(b);
  }

  // Relabel by ascending conflict degree so colouring sees the freest
  // vertices first; ties by rank.
  std::vector<std::uint32_t> order(v);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::size_t> degree(v);
  for (std::size_t i = 0; i < v; ++i) degree[i] = conflict[i].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return degree[a] < degree[b]; });
  std::vector<std::uint32_t> position(v);
  for (std::size_t i = 0; i < v; ++i) position[order[i]] = static_cast<std::uint32_t>(i);

  std::vector<DynamicBitset> compatible(v, DynamicBitset(v, true));
  for (std::size_t i = 0; i < v; ++i) {
    auto& row = compatible[position[i]];
    conflict[i].for_each([&](std::size_t j) { row.reset(position[j]); });
  }

  // Greedy incumbent in relabelled order.
  std::vector<std::uint32_t> greedy;
  DynamicBitset free(v, true);
  for (auto u = free.find_first(); u != DynamicBitset::npos; u = free.find_first()) {
    greedy.push_back(static_cast<std::uint32_t>(u));
    free &= compatible[u];
  }

  CliqueSearch search(std::move(compatible), options.time_budget_seconds);
  search.run(greedy);

  Code packing(n, static_cast<int>(len));
  for (auto u : search.best()) packing.insert(Word::unrank(order[u], n, len));
  const bool proved = search.completed();
  const std::size_t optimum = packing.size();
  return SolveResult{ProblemKind::packing,
                     n,
                     r + 1,
                     r,
                     optimum,
                     packing,
                     proved ? SolveStatus::proved_optimal : SolveStatus::best_known,
                     proved ? optimum : search.root_colours(),
                     {search.nodes(), seconds_since(start)}};
}

}  // namespace inscover
