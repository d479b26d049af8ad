#include "inscover/diagnostics.hpp"

#include "inscover/constructions.hpp"
#include "inscover/errors.hpp"
#include "inscover/random.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

namespace inscover {

WeightedSetSystem WeightedSetSystem::uniform(int ground_size, std::vector<DynamicBitset> sets) {
  if (ground_size < 1) throw PreconditionError("WeightedSetSystem: empty ground set");
  WeightedSetSystem s;
  s.ground_size = ground_size;
  s.weights.assign(static_cast<std::size_t>(ground_size), make_rational(1, ground_size));
  s.sets = std::move(sets);
  s.validate();
  return s;
}

Rational WeightedSetSystem::measure(const DynamicBitset& members) const {
  Rational total = 0;
  members.for_each([&](std::size_t e) { total += weights[e]; });
  return total;
}

void WeightedSetSystem::validate() const {
  if (ground_size < 1 || weights.size() != static_cast<std::size_t>(ground_size))
    throw PreconditionError("WeightedSetSystem: weight count differs from ground size");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw PreconditionError("WeightedSetSystem: negative weight");
    total += w;
  }
  if (total != 1) throw PreconditionError("WeightedSetSystem: weights sum to " + to_string(total));
  for (const auto& set : sets)
    if (set.size() != static_cast<std::size_t>(ground_size))
      throw PreconditionError("WeightedSetSystem: set over the wrong ground size");
}

std::string WeightedSetSystem::describe() const {
  std::ostringstream out;
  out << "ground=" << ground_size << " weights=[";
  for (std::size_t e = 0; e < weights.size(); ++e) out << (e ? " " : "") << weights[e];
  out << "]";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << " C" << i << "={";
    bool first = true;
    sets[i].for_each([&](std::size_t e) {
      out << (first ? "" : ",") << e;
      first = false;
    });
    out << "}";
  }
  return out.str();
}

namespace {

void require_spanning_tree(std::span<const Edge> edges, int k) {
  if (k < 1) throw PreconditionError("tree: no sets");
  if (edges.size() != static_cast<std::size_t>(k - 1))
    throw PreconditionError("tree: expected " + std::to_string(k - 1) + " edges, got " +
                            std::to_string(edges.size()));
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v)
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= k || b >= k)
      throw PreconditionError("tree: edge index out of range");
    const int ra = find(a), rb = find(b);
    if (ra == rb) throw PreconditionError("tree: edge set contains a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
}

DynamicBitset union_of(const WeightedSetSystem& s) {
  DynamicBitset all(static_cast<std::size_t>(s.ground_size));
  for (const auto& set : s.sets) all |= set;
  return all;
}

Rational tree_rhs(const WeightedSetSystem& s, std::span<const Edge> edges) {
  Rational rhs = 0;
  for (const auto& set : s.sets) rhs += s.measure(set);
  for (auto [a, b] : edges) {
    DynamicBitset both = s.sets[static_cast<std::size_t>(a)];
    both &= s.sets[static_cast<std::size_t>(b)];
    rhs -= s.measure(both);
  }
  return rhs;
}

}  // namespace

BonferroniCheck bonferroni_check(const WeightedSetSystem& s, std::span<const Edge> tree_edges) {
  require_spanning_tree(tree_edges, static_cast<int>(s.num_sets()));
  BonferroniCheck out;
  out.lhs = s.measure(union_of(s));
  out.rhs = tree_rhs(s, tree_edges);
  out.holds = out.lhs <= out.rhs;
  return out;
}

std::vector<Edge> star_edges(int k, int center) {
  if (center < 0 || center >= k) throw PreconditionError("star_edges: centre out of range");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    if (i != center) edges.emplace_back(center, i);
  return edges;
}

StarBonferroniCheck star_bonferroni_check(const WeightedSetSystem& s, int center) {
  const int k = static_cast<int>(s.num_sets());
  const auto edges = star_edges(k, center);
  StarBonferroniCheck out;
  out.lhs = s.measure(union_of(s));

  DynamicBitset residue(static_cast<std::size_t>(s.ground_size));
  for (int e = 0; e < s.ground_size; ++e) {
    const auto idx = static_cast<std::size_t>(e);
    int t = 0;
    for (const auto& set : s.sets) t += set.test(idx);
    if (t >= 2 && !s.sets[static_cast<std::size_t>(center)].test(idx)) residue.set(idx);
  }
  out.residue = s.measure(residue);
  out.rhs = tree_rhs(s, edges) - out.residue;
  out.slack = out.rhs - out.lhs;
  out.holds = out.slack >= 0;
  return out;
}

std::vector<Edge> prufer_tree(std::span<const int> sequence, int k) {
  if (k < 1) throw PreconditionError("prufer_tree: need k >= 1");
  if (k == 1) return {};
  if (sequence.size() != static_cast<std::size_t>(k - 2))
    throw PreconditionError("prufer_tree: sequence must have length k-2");
  std::vector<int> degree(static_cast<std::size_t>(k), 1);
  for (int v : sequence) {
    if (v < 0 || v >= k) throw PreconditionError("prufer_tree: label out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<Edge> edges;
  for (int v : sequence) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  int u = -1;
  for (int v = 0; v < k; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  return edges;
}

namespace {

constexpr std::uint64_t kMaxDiagnosticUniverse = std::uint64_t{1} << 24;

// Bit i of masks[rank(a)] is set when deleting coordinate i of a lands in c.
std::vector<std::uint32_t> deletion_masks(const Code& c) {
  const int n = c.alphabet_size();
  const auto r = static_cast<std::size_t>(c.word_length());
  if (r + 1 > 31) throw ResourceLimitError("diagnostics: word length too large");
  const auto universe = power_checked(static_cast<std::uint64_t>(n), r + 1);
  if (universe > kMaxDiagnosticUniverse) throw ResourceLimitError("diagnostics: [n]^(r+1) too large");
  std::vector<char> in_code(static_cast<std::size_t>(universe / static_cast<std::uint64_t>(n)), 0);
  for (const auto& w : c) in_code[static_cast<std::size_t>(w.rank(n))] = 1;

  std::vector<std::uint32_t> masks(static_cast<std::size_t>(universe), 0);
  for (std::uint64_t idx = 0; idx < universe; ++idx) {
    const Word a = Word::unrank(idx, n, r + 1);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i <= r; ++i)
      if (in_code[static_cast<std::size_t>(a.without(i).rank(n))]) mask |= 1u << i;
    masks[static_cast<std::size_t>(idx)] = mask;
  }
  return masks;
}

}  // namespace

WeightedSetSystem deletion_system(const Code& c) {
  const auto masks = deletion_masks(c);
  const std::size_t k = static_cast<std::size_t>(c.word_length()) + 1;
  std::vector<DynamicBitset> sets(k, DynamicBitset(masks.size()));
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t i = 0; i < k; ++i)
      if (masks[a] >> i & 1u) sets[i].set(a);
  return WeightedSetSystem::uniform(static_cast<int>(masks.size()), std::move(sets));
}

std::uint64_t AtomProfile::universe() const {
  return power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(r) + 1);
}

AtomProfile atom_profile(const Code& c) {
  const auto masks = deletion_masks(c);
  const int r = c.word_length();
  const auto k = static_cast<std::size_t>(r) + 1;
  const auto universe = static_cast<std::int64_t>(masks.size());

  AtomProfile p;
  p.n = c.alphabet_size();
  p.r = r;
  p.density = c.density();
  p.histogram.assign(k + 1, 0);
  std::vector<std::uint64_t> petal(k, 0), complement(k, 0);
  std::uint64_t kernel = 0, residue = 0;
  for (std::size_t a = 0; a < masks.size(); ++a) {
    const auto t = static_cast<std::size_t>(std::popcount(masks[a]));
    if (t == 0)
      throw NotCoveringError("atom_profile: code does not cover [n]^(r+1)",
                             Word::unrank(a, p.n, k));
    ++p.histogram[t];
    p.total_multiplicity += t;
    if (t == k) {
      ++kernel;
    } else if (t == 1) {
      ++petal[static_cast<std::size_t>(std::countr_zero(masks[a]))];
    } else {
      ++residue;
      for (std::size_t j = 0; j < k; ++j)
        if (!(masks[a] >> j & 1u)) ++complement[j];
    }
  }
  auto measure = [&](std::uint64_t count) {
    return make_rational(static_cast<std::int64_t>(count), universe);
  };
  p.kernel = measure(kernel);
  p.residue = measure(residue);
  for (std::size_t i = 0; i < k; ++i) {
    p.petals.push_back(measure(petal[i]));
    p.residue_complements.push_back(measure(complement[i]));
  }
  return p;
}

InequalityCheck check_residue_bound(const AtomProfile& p) {
  InequalityCheck out;
  out.lhs = p.residue;
  out.rhs = Rational(p.r * (p.r + 1)) * (1 - p.density) * (p.density - make_rational(1, p.r));
  out.holds = out.lhs <= out.rhs;
  return out;
}

std::vector<InequalityCheck> check_residue_complements(const AtomProfile& p) {
  const Rational rhs = (1 - p.density) * (Rational(p.r) * p.density - 1);
  std::vector<InequalityCheck> out;
  for (const auto& rj : p.residue_complements) out.push_back({rj <= rhs, rj, rhs});
  return out;
}

InequalityCheck check_density_floor(const AtomProfile& p) {
  InequalityCheck out;
  out.lhs = (1 - p.density) * (Rational(p.r) * p.density - 1);
  out.rhs = 0;
  out.holds = out.lhs >= out.rhs;
  return out;
}

PairwiseCheck check_pairwise_intersections(const Code& c) {
  const auto masks = deletion_masks(c);
  const int k = c.word_length() + 1;
  const auto universe = static_cast<std::int64_t>(masks.size());

  PairwiseCheck out;
  out.square = c.density() * c.density();
  out.holds = true;
  out.adjacent_holds = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const std::uint32_t both = (1u << i) | (1u << j);
      std::int64_t count = 0;
      for (auto m : masks) count += (m & both) == both;
      const Rational value = make_rational(count, universe);
      if (!out.worst_pair || value < out.min_intersection) {
        out.min_intersection = value;
        out.worst_pair = Edge{i, j};
      }
      if (value < out.square) {
        out.holds = false;
        if (j == i + 1) out.adjacent_holds = false;
      }
    }
  return out;
}

namespace {

struct Trial {
  WeightedSetSystem system;
  std::vector<Edge> tree;
  int center = 0;
};

Trial random_trial(std::uint64_t seed, std::uint64_t index, bool star) {
  auto rng = stream_rng(seed, index);
  const int ground = 1 + static_cast<int>(uniform_below(rng, 32));
  const int k = 2 + static_cast<int>(uniform_below(rng, 7));
  const auto tenths = 1 + uniform_below(rng, 9);
  std::vector<DynamicBitset> sets(static_cast<std::size_t>(k),
                                  DynamicBitset(static_cast<std::size_t>(ground)));
  for (auto& set : sets)
    for (int e = 0; e < ground; ++e)
      if (uniform_below(rng, 10) < tenths) set.set(static_cast<std::size_t>(e));

  Trial trial{WeightedSetSystem::uniform(ground, std::move(sets)), {}, 0};
  if (star) {
    trial.center = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    trial.tree = star_edges(k, trial.center);
  } else {
    std::vector<int> code(static_cast<std::size_t>(k - 2));
    for (auto& v : code) v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    trial.tree = prufer_tree(code, k);
  }
  return trial;
}

}  // namespace

FuzzReport bonferroni_fuzz(const FuzzOptions& options) {
  std::vector<char> ok(static_cast<std::size_t>(options.trials), 1);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < options.trials; i = next++) {
      const Trial t = random_trial(options.seed, i, options.star);
      const bool holds = options.star ? star_bonferroni_check(t.system, t.center).holds
                                      : bonferroni_check(t.system, t.tree).holds;
      ok[static_cast<std::size_t>(i)] = holds;
    }
  };
  const int threads = std::max(1, options.threads);
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport report;
  report.trials = options.trials;
  for (std::uint64_t i = 0; i < options.trials; ++i) {
    if (ok[static_cast<std::size_t>(i)]) continue;
    if (report.violations++ == 0) {
      const Trial t = random_trial(options.seed, i, options.star);
      std::ostringstream msg;
      msg << "trial " << i << ": " << t.system.describe() << " tree=";
      for (auto [a, b] : t.tree) msg << "(" << a << "," << b << ")";
      report.first_violation = msg.str();
    }
  }
  return report;
}

}  // namespace inscover
