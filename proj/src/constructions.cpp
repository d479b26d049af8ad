#include "inscover/constructions.hpp"

#include "inscover/errors.hpp"
#include "inscover/random.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace inscover {

SymbolMap::SymbolMap(int target_size, std::vector<Symbol> table)
    : target_size_(target_size), table_(std::move(table)) {
  if (target_size_ < 1 || target_size_ > kMaxAlphabet)
    throw PreconditionError("SymbolMap: bad target size");
  if (table_.empty() || table_.size() > static_cast<std::size_t>(kMaxAlphabet))
    throw PreconditionError("SymbolMap: bad source size");
  for (Symbol s : table_)
    if (static_cast<int>(s) >= target_size_)
      throw PreconditionError("SymbolMap: entry " + std::to_string(s) + " outside [" +
                              std::to_string(target_size_) + "]");
}

SymbolMap SymbolMap::identity(int size) {
  std::vector<Symbol> table(static_cast<std::size_t>(size));
  std::iota(table.begin(), table.end(), Symbol{0});
  return SymbolMap(size, std::move(table));
}

SymbolMap SymbolMap::modulo(int source_size, int target_size) {
  std::vector<Symbol> table(static_cast<std::size_t>(source_size));
  for (int y = 0; y < source_size; ++y) table[static_cast<std::size_t>(y)] = static_cast<Symbol>(y % target_size);
  return SymbolMap(target_size, std::move(table));
}

SymbolMap SymbolMap::constant(int source_size, int target_size, Symbol value) {
  return SymbolMap(target_size, std::vector<Symbol>(static_cast<std::size_t>(source_size), value));
}

std::vector<Symbol> SymbolMap::preimage(Symbol value) const {
  std::vector<Symbol> out;
  for (std::size_t y = 0; y < table_.size(); ++y)
    if (table_[y] == value) out.push_back(static_cast<Symbol>(y));
  return out;
}

Code preimage_code(const Code& c, const SymbolMap& f) {
  if (c.alphabet_size() != f.target_size())
    throw PreconditionError("preimage_code: code alphabet differs from the map's target");
  std::vector<std::vector<Symbol>> fibres(static_cast<std::size_t>(f.target_size()));
  for (int x = 0; x < f.target_size(); ++x) fibres[static_cast<std::size_t>(x)] = f.preimage(static_cast<Symbol>(x));

  Code out(f.source_size(), c.word_length());
  const std::size_t r = static_cast<std::size_t>(c.word_length());
  std::vector<Symbol> buffer(r);
  std::vector<std::size_t> digit(r);
  for (const auto& w : c) {
    bool empty_fibre = false;
    for (std::size_t i = 0; i < r; ++i) empty_fibre |= fibres[w[i]].empty();
    if (empty_fibre) continue;
    // Odometer over the product of fibres.
    std::fill(digit.begin(), digit.end(), 0);
    bool done = false;
    while (!done) {
      for (std::size_t i = 0; i < r; ++i) buffer[i] = fibres[w[i]][digit[i]];
      out.insert(Word(buffer));
      done = true;
      for (std::size_t i = r; i-- > 0;) {
        if (++digit[i] < fibres[w[i]].size()) {
          done = false;
          break;
        }
        digit[i] = 0;
      }
    }
  }
  return out;
}

Code mod_lift(const Code& c, int m) {
  if (m < c.alphabet_size())
    throw PreconditionError("mod_lift: target alphabet " + std::to_string(m) +
                            " is smaller than " + std::to_string(c.alphabet_size()));
  return preimage_code(c, SymbolMap::modulo(m, c.alphabet_size()));
}

RandomLift random_lift(const Code& c, int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxAlphabet) throw PreconditionError("random_lift: bad alphabet size");
  std::mt19937_64 rng(seed);
  std::vector<Symbol> table(static_cast<std::size_t>(n));
  for (auto& s : table)
    s = static_cast<Symbol>(uniform_below(rng, static_cast<std::uint64_t>(c.alphabet_size())));
  SymbolMap map(c.alphabet_size(), std::move(table));
  Code code = preimage_code(c, map);
  return {std::move(code), std::move(map)};
}

Rational random_lift_expected_size(const Code& c, int n) {
  // By linearity: sum over rho in [n]^r of Pr[f(rho) in c]. For rho with d
  // distinct symbols the image is uniform over the N^d words that repeat
  // symbols wherever rho does.
  const int big_n = c.alphabet_size();
  const std::size_t r = static_cast<std::size_t>(c.word_length());
  const auto total = power_checked(static_cast<std::uint64_t>(n), r);
  if (total > (std::uint64_t{1} << 24))
    throw ResourceLimitError("random_lift_expected_size: [n]^r too large");
  Rational sum = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Word rho = Word::unrank(idx, n, r);
    std::vector<Symbol> distinct(rho.begin(), rho.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::uint64_t consistent = 0;
    for (const auto& w : c) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i)
        for (std::size_t j = i + 1; j < r && ok; ++j)
          if (rho[i] == rho[j] && w[i] != w[j]) ok = false;
      consistent += ok;
    }
    sum += Rational(BigInt(consistent),
                    BigInt(power_checked(static_cast<std::uint64_t>(big_n), distinct.size())));
  }
  return sum;
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    if (n < i) return 0;
    out *= n - i;
  }
  return out;
}

Code turan_to_code(const TuranSystem& t, int k) {
  if (auto check = verify_turan(t, k); !check)
    throw NotCoveringError("turan_to_code: not a Turan (" + std::to_string(t.ground_size()) + "," +
                               std::to_string(k) + "," + std::to_string(t.set_size()) + ")-system",
                           *check.witness);
  const int n = t.ground_size();
  const int r = t.set_size();
  Code out(n, r);
  for (const auto& s : t) {
    std::vector<Symbol> perm(s.begin(), s.end());
    do {
      out.insert(Word(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const auto total = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(r));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = Word::unrank(idx, n, static_cast<std::size_t>(r));
    if (!w.injective()) out.insert(std::move(w));
  }
  return out;
}

TuranSystem code_to_turan(const Code& c, int k) {
  const int n = c.alphabet_size();
  if (n < k) throw PreconditionError("code_to_turan: need n >= k");
  if (!is_symmetric(c)) throw PreconditionError("code_to_turan: code is not symmetric");
  if (auto check = verify_cover(c, k); !check)
    throw NotCoveringError("code_to_turan: code does not cover [n]^k", *check.witness);
  TuranSystem out(n, c.word_length());
  for (const auto& w : c)
    if (w.injective()) out.insert(w);
  return out;
}

Code half_cube_code(int n) {
  if (n < 1) throw PreconditionError("half_cube_code: need n >= 1");
  const int split = (n + 1) / 2;
  Code out(n, 2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x < split) == (y < split)) out.insert(Word{x, y});
  return out;
}

TuranSystem mantel_system(int n) {
  if (n < 3) throw PreconditionError("mantel_system: need n >= 3");
  const int split = n / 2;
  TuranSystem out(n, 2);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((x < split) == (y < split)) out.insert(Word{x, y});
  return out;
}

TuranSystem turan43_system(int n) {
  if (n < 3) throw PreconditionError("turan43_system: need n >= 3");
  TuranSystem out(n, 3);
  for (const auto& triple : k_subsets(n, 3)) {
    std::array<int, 3> in_part{};
    for (Symbol s : triple) ++in_part[static_cast<std::size_t>(s % 3)];
    bool keep = false;
    for (std::size_t i = 0; i < 3; ++i) {
      if (in_part[i] == 3) keep = true;
      if (in_part[i] == 2 && in_part[(i + 1) % 3] == 1) keep = true;
    }
    if (keep) out.insert(triple);
  }
  return out;
}

std::uint64_t turan43_size_balanced(std::uint64_t m) {
  const auto choose2 = m * (m - (m > 0)) / 2;
  const auto choose3 = m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
  return 3 * choose3 + 3 * m * choose2;
}

}  // namespace inscover
