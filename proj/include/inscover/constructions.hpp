#pragma once

// Explicit codes and Turán systems: preimages under symbol maps (including
// the mod-n and random lifts), conversions between Turán systems and
// symmetric codes, and the classical extremal constructions.

#include "inscover/cover.hpp"
#include "inscover/words.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace inscover {

// A function [source_size] -> [target_size].
class SymbolMap {
 public:
  SymbolMap(int target_size, std::vector<Symbol> table);

  static SymbolMap identity(int size);
  static SymbolMap modulo(int source_size, int target_size);
  static SymbolMap constant(int source_size, int target_size, Symbol value);

  int source_size() const noexcept { return static_cast<int>(table_.size()); }
  int target_size() const noexcept { return target_size_; }
  Symbol operator()(Symbol s) const { return table_.at(s); }
  const std::vector<Symbol>& table() const noexcept { return table_; }

  // Symbols of [source_size] mapped to `value`, ascending.
  std::vector<Symbol> preimage(Symbol value) const;

 private:
  int target_size_;
  std::vector<Symbol> table_;
};

// A construction input failed its coverage check.
class NotCoveringError : public std::invalid_argument {
 public:
  NotCoveringError(const std::string& what, Word witness)
      : std::invalid_argument(what + " (uncovered: " + witness.str() + ")"),
        witness_(std::move(witness)) {}

  const Word& witness() const noexcept { return witness_; }

 private:
  Word witness_;
};

// { w in [m]^r : f(w) in c }, with f applied coordinatewise.
Code preimage_code(const Code& c, const SymbolMap& f);

// Preimage under y -> y mod n. Requires m >= n.
Code mod_lift(const Code& c, int m);

struct RandomLift {
  Code code;
  SymbolMap map;  // the sampled [n] -> [N]
};

// Preimage under a uniformly random map [n] -> [N] drawn from a 64-bit
// Mersenne Twister seeded with `seed`.
RandomLift random_lift(const Code& c, int n, std::uint64_t seed);

// Exact E|random_lift(c, n, .).code|, summing over all N^n maps. Desk scale
// only (N^n must stay below 2^24).
Rational random_lift_expected_size(const Code& c, int n);

// All r! orderings of every member of t, plus every non-injective word of
// [n]^r. Throws NotCoveringError when t is not a Turán (n,k,r)-system.
Code turan_to_code(const TuranSystem& t, int k);

// Underlying r-sets of the injective words of a symmetric code covering
// [n]^k. Requires n >= k; throws PreconditionError for a non-symmetric code
// and NotCoveringError for a non-covering one.
TuranSystem code_to_turan(const Code& c, int k);

// {(x,y): x,y < ceil(n/2)} u {(x,y): x,y >= ceil(n/2)}; covers [n]^3.
Code half_cube_code(int n);

// Complete graphs on {0..floor(n/2)-1} and {floor(n/2)..n-1}; a Turán
// (n,3,2)-system. Requires n >= 3.
TuranSystem mantel_system(int n);

// Symbol s goes to part s mod 3; keeps every triple inside one part and every
// triple with two elements in part i and one in part i+1 (mod 3). A Turán
// (n,4,3)-system. Requires n >= 3.
TuranSystem turan43_system(int n);

// 3*C(m,3) + 3*m*C(m,2), the size of turan43_system(3m).
std::uint64_t turan43_size_balanced(std::uint64_t m);

// n (n-1) ... (n-r+1)
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t r);

}  // namespace inscover
