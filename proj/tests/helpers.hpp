#pragma once

#include "inscover/words.hpp"
#include "oracles.hpp"

#include <set>
#include <vector>

namespace testing_support {

inline oracle::Seq to_seq(const inscover::Word& w) { return oracle::Seq(w.begin(), w.end()); }

inline inscover::Word to_word(const oracle::Seq& s) {
  std::vector<inscover::Symbol> symbols(s.begin(), s.end());
  return inscover::Word(symbols);
}

inline std::set<oracle::Seq> to_seqs(const std::set<inscover::Word>& words) {
  std::set<oracle::Seq> out;
  for (const auto& w : words) out.insert(to_seq(w));
  return out;
}

inline std::vector<oracle::Seq> to_seq_list(const std::set<inscover::Word>& words) {
  std::vector<oracle::Seq> out;
  for (const auto& w : words) out.push_back(to_seq(w));
  return out;
}

}  // namespace testing_support
