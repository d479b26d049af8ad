#pragma once

// Covering codes with k = r+1 produced by every generator the tests exercise:
// solvers, greedy, constructions, conversions and lifts. The universal bound
// suite runs over all of them.

#include "inscover/words.hpp"

#include <string>
#include <vector>

namespace testing_support {

struct NamedCode {
  std::string name;
  inscover::Code code;
};

// The published optimal code for n = 3, r = 3 (12 words).
inscover::Code grozea_code();

std::vector<NamedCode> covering_corpus();

}  // namespace testing_support
