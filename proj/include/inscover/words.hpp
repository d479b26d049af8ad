#pragma once

// Sequence combinatorics over the alphabet [n] = {0, ..., n-1}: words,
// codes, families of r-subsets, the subsequence relation, deletion and
// insertion balls, symmetric closure and canonical forms.

#include "inscover/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace inscover {

using Symbol = std::uint8_t;

// Largest alphabet a Symbol can carry.
inline constexpr int kMaxAlphabet = 255;

// A fixed-length sequence of symbols. The alphabet is not stored; containers
// (Code, TuranSystem) validate symbols against their own alphabet size.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> symbols);
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  Word reversed() const;
  // The word with coordinate i removed.
  Word without(std::size_t i) const;
  // The word with `s` inserted before coordinate i (i == size() appends).
  Word with_inserted(std::size_t i, Symbol s) const;

  bool all_below(int n) const noexcept;
  bool injective() const noexcept;

  // Base-n packed index; lexicographic order of words of equal length
  // equals numeric order of their ranks.
  std::uint64_t rank(int n) const;
  static Word unrank(std::uint64_t index, int n, std::size_t length);

  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// n^len, throwing ResourceLimitError when it does not fit in 64 bits.
std::uint64_t power_checked(std::uint64_t n, std::size_t len);

// A finite set of length-r words over [n].
class Code {
 public:
  Code(int alphabet_size, int word_length);
  Code(int alphabet_size, int word_length, std::initializer_list<Word> words);

  int alphabet_size() const noexcept { return n_; }
  int word_length() const noexcept { return r_; }

  // Inserts w; returns false for a duplicate. Throws PreconditionError for
  // a wrong length or out-of-range symbol.
  bool insert(Word w);
  bool erase(const Word& w) { return words_.erase(w) > 0; }
  bool contains(const Word& w) const { return words_.count(w) > 0; }

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::set<Word>& words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  // |C| / n^r
  Rational density() const;

  // Every word of [n]^r.
  static Code full(int alphabet_size, int word_length);

  bool operator==(const Code&) const = default;
  // Lexicographic on the sorted word lists (parameters compared first).
  auto operator<=>(const Code& other) const = default;

 private:
  int n_;
  int r_;
  std::set<Word> words_;
};

// A family of r-element subsets of [n]. Each member is stored as a Word
// with strictly increasing symbols.
class TuranSystem {
 public:
  TuranSystem(int ground_size, int set_size);
  TuranSystem(int ground_size, int set_size, std::initializer_list<Word> sets);

  int ground_size() const noexcept { return n_; }
  int set_size() const noexcept { return r_; }

  // Accepts any ordering of distinct symbols; stores the sorted form.
  bool insert(Word subset);
  bool contains(const Word& sorted_subset) const { return sets_.count(sorted_subset) > 0; }

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const std::set<Word>& sets() const noexcept { return sets_; }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  static TuranSystem all_subsets(int ground_size, int set_size);

  bool operator==(const TuranSystem&) const = default;

 private:
  int n_;
  int r_;
  std::set<Word> sets_;
};

// All strictly increasing words of length k over [n], in lexicographic order.
std::vector<Word> k_subsets(int n, int k);

// True iff x is a subsequence of a. Greedy left-to-right, O(|a|).
// Throws PreconditionError when |x| > |a|.
bool is_subsequence(const Word& x, const Word& a);

// The distinct length-r subsequences of a.
std::set<Word> deletion_ball(const Word& a, std::size_t r);

// The words of length |x|+1 over [n] that contain x as a subsequence.
// Always has (r+1)(n-1)+1 elements.
std::set<Word> insertion_ball(const Word& x, int n);

// The words of length k over [n] that contain x as a subsequence.
std::set<Word> supersequences(const Word& x, int n, std::size_t k);

// Smallest superset closed under all permutations of the coordinates.
Code symmetrize(const Code& c);
bool is_symmetric(const Code& c);

enum class SymmetryGroup {
  symbol_permutations,   // the n! renamings of the alphabet
  symbols_and_reversal,  // renamings combined with reversal of every word
};

// Applies the symbol permutation `perm` (perm[s] is the image of s) and, when
// `reverse` is set, reverses every word.
Code transform(const Code& c, std::span<const Symbol> perm, bool reverse);

// Lexicographically least code in the orbit of c under `group`. Brute force
// over the group; alphabets above 8 symbols are rejected.
Code canonical_form(const Code& c,
                    SymmetryGroup group = SymmetryGroup::symbols_and_reversal);

inline constexpr int kMaxCanonicalAlphabet = 8;

}  // namespace inscover
