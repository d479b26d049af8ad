#include "inscover/words.hpp"

#include "inscover/errors.hpp"

#include <algorithm>
#include <numeric>

namespace inscover {

Word::Word(std::initializer_list<int> symbols) {
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s >= kMaxAlphabet)
      throw PreconditionError("symbol out of range: " + std::to_string(s));
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

Word Word::reversed() const {
  return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

Word Word::without(std::size_t i) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() - 1);
  for (std::size_t j = 0; j < symbols_.size(); ++j)
    if (j != i) out.push_back(symbols_[j]);
  return Word(std::move(out));
}

Word Word::with_inserted(std::size_t i, Symbol s) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + 1);
  out.insert(out.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(s);
  out.insert(out.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(i), symbols_.end());
  return Word(std::move(out));
}

bool Word::all_below(int n) const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [n](Symbol s) { return static_cast<int>(s) < n; });
}

bool Word::injective() const noexcept {
  std::vector<Symbol> sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::uint64_t Word::rank(int n) const {
  std::uint64_t index = 0;
  for (Symbol s : symbols_) index = index * static_cast<std::uint64_t>(n) + s;
  return index;
}

Word Word::unrank(std::uint64_t index, int n, std::size_t length) {
  std::vector<Symbol> out(length);
  for (std::size_t i = length; i-- > 0;) {
    out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols_[i]);
  }
  return out + ")";
}

std::uint64_t power_checked(std::uint64_t n, std::size_t len) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (n != 0 && p > UINT64_MAX / n)
      throw ResourceLimitError("n^" + std::to_string(len) + " overflows 64 bits");
    p *= n;
  }
  return p;
}

namespace {

void check_parameters(int n, int len, const char* what) {
  if (n < 1 || n > kMaxAlphabet)
    throw PreconditionError(std::string(what) + ": alphabet size must be in [1, 255]");
  if (len < 1) throw PreconditionError(std::string(what) + ": length must be positive");
}

}  // namespace

Code::Code(int alphabet_size, int word_length) : n_(alphabet_size), r_(word_length) {
  check_parameters(n_, r_, "Code");
}

Code::Code(int alphabet_size, int word_length, std::initializer_list<Word> words)
    : Code(alphabet_size, word_length) {
  for (const auto& w : words) insert(w);
}

bool Code::insert(Word w) {
  if (w.size() != static_cast<std::size_t>(r_))
    throw PreconditionError("word " + w.str() + " does not have length " + std::to_string(r_));
  if (!w.all_below(n_))
    throw PreconditionError("word " + w.str() + " has a symbol outside [" +
                            std::to_string(n_) + "]");
  return words_.insert(std::move(w)).second;
}

Rational Code::density() const {
  return Rational(BigInt(words_.size()), BigInt(power_checked(static_cast<std::uint64_t>(n_),
                                                              static_cast<std::size_t>(r_))));
}

Code Code::full(int alphabet_size, int word_length) {
  Code c(alphabet_size, word_length);
  const auto total = power_checked(static_cast<std::uint64_t>(alphabet_size),
                                   static_cast<std::size_t>(word_length));
  for (std::uint64_t i = 0; i < total; ++i)
    c.words_.insert(c.words_.end(), Word::unrank(i, alphabet_size, static_cast<std::size_t>(word_length)));
  return c;
}

TuranSystem::TuranSystem(int ground_size, int set_size) : n_(ground_size), r_(set_size) {
  check_parameters(n_, r_, "TuranSystem");
}

TuranSystem::TuranSystem(int ground_size, int set_size, std::initializer_list<Word> sets)
    : TuranSystem(ground_size, set_size) {
  for (const auto& s : sets) insert(s);
}

bool TuranSystem::insert(Word subset) {
  if (subset.size() != static_cast<std::size_t>(r_))
    throw PreconditionError("set " + subset.str() + " does not have " + std::to_string(r_) +
                            " elements");
  if (!subset.all_below(n_))
    throw PreconditionError("set " + subset.str() + " has an element outside [" +
                            std::to_string(n_) + "]");
  std::vector<Symbol> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("set " + subset.str() + " has a repeated element");
  return sets_.insert(Word(std::move(sorted))).second;
}

TuranSystem TuranSystem::all_subsets(int ground_size, int set_size) {
  TuranSystem t(ground_size, set_size);
  for (auto& s : k_subsets(ground_size, set_size)) t.sets_.insert(t.sets_.end(), std::move(s));
  return t;
}

std::vector<Word> k_subsets(int n, int k) {
  std::vector<Word> out;
  if (k < 0 || k > n) return out;
  std::vector<Symbol> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), Symbol{0});
  while (true) {
    out.emplace_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      current[static_cast<std::size_t>(j)] = static_cast<Symbol>(current[static_cast<std::size_t>(j - 1)] + 1);
  }
  return out;
}

bool is_subsequence(const Word& x, const Word& a) {
  if (x.size() > a.size())
    throw PreconditionError("is_subsequence: |x| = " + std::to_string(x.size()) +
                            " exceeds |a| = " + std::to_string(a.size()));
  std::size_t matched = 0;
  for (std::size_t i = 0; i < a.size() && matched < x.size(); ++i)
    if (a[i] == x[matched]) ++matched;
  return matched == x.size();
}

namespace {

void collect_subsequences(const Word& a, std::size_t r, std::size_t from,
                          std::vector<Symbol>& prefix, std::set<Word>& out) {
  if (prefix.size() == r) {
    out.emplace(prefix);
    return;
  }
  const std::size_t remaining = r - prefix.size();
  for (std::size_t i = from; i + remaining <= a.size(); ++i) {
    prefix.push_back(a[i]);
    collect_subsequences(a, r, i + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> deletion_ball(const Word& a, std::size_t r) {
  if (r < 1 || r > a.size())
    throw PreconditionError("deletion_ball: need 1 <= r <= |a|");
  std::set<Word> out;
  std::vector<Symbol> prefix;
  prefix.reserve(r);
  collect_subsequences(a, r, 0, prefix, out);
  return out;
}

std::set<Word> insertion_ball(const Word& x, int n) {
  if (n < 1 || n > kMaxAlphabet) throw PreconditionError("insertion_ball: bad alphabet size");
  if (!x.all_below(n)) throw PreconditionError("insertion_ball: word outside alphabet");
  std::set<Word> out;
  for (std::size_t i = 0; i <= x.size(); ++i)
    for (int s = 0; s < n; ++s) out.insert(x.with_inserted(i, static_cast<Symbol>(s)));
  return out;
}

std::set<Word> supersequences(const Word& x, int n, std::size_t k) {
  if (k < x.size()) throw PreconditionError("supersequences: k < |x|");
  std::set<Word> layer{x};
  for (std::size_t len = x.size(); len < k; ++len) {
    std::set<Word> next;
    for (const auto& w : layer) next.merge(insertion_ball(w, n));
    layer = std::move(next);
  }
  return layer;
}

Code symmetrize(const Code& c) {
  Code out(c.alphabet_size(), c.word_length());
  for (const auto& w : c) {
    std::vector<Symbol> perm(w.begin(), w.end());
    std::sort(perm.begin(), perm.end());
    do {
      out.insert(Word(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

bool is_symmetric(const Code& c) {
  for (const auto& w : c) {
    std::vector<Symbol> perm(w.begin(), w.end());
    std::sort(perm.begin(), perm.end());
    do {
      if (!c.contains(Word(perm))) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

Code transform(const Code& c, std::span<const Symbol> perm, bool reverse) {
  if (perm.size() != static_cast<std::size_t>(c.alphabet_size()))
    throw PreconditionError("transform: permutation size differs from alphabet size");
  Code out(c.alphabet_size(), c.word_length());
  std::vector<Symbol> buffer(static_cast<std::size_t>(c.word_length()));
  for (const auto& w : c) {
    for (std::size_t i = 0; i < w.size(); ++i) buffer[i] = perm[w[i]];
    if (reverse) std::reverse(buffer.begin(), buffer.end());
    out.insert(Word(buffer));
  }
  return out;
}

Code canonical_form(const Code& c, SymmetryGroup group) {
  const int n = c.alphabet_size();
  if (n > kMaxCanonicalAlphabet)
    throw PreconditionError("canonical_form: alphabet size " + std::to_string(n) +
                            " exceeds " + std::to_string(kMaxCanonicalAlphabet));
  std::vector<Symbol> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Symbol{0});
  Code best = c;
  do {
    for (int rev = 0; rev < (group == SymmetryGroup::symbols_and_reversal ? 2 : 1); ++rev) {
      Code image = transform(c, perm, rev == 1);
      if (image.words() < best.words()) best = std::move(image);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace inscover
