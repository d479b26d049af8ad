#pragma once

// Closed-form bounds on the optimal code density s(r+1,r) and the Turán
// density t(r+1,r), evaluated with directed rounding so that every printed
// lower bound is rounded down and every upper bound rounded up.

#include "inscover/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace inscover {

enum class Rounding { down, up };

// Decimal rendering of `value` truncated toward -inf (down) or +inf (up) at
// `digits` decimals.
std::string format_directed(double value, Rounding direction, int digits = 7);
std::string format_directed(const Rational& value, Rounding direction, int digits = 7);

// ceil(n^(r+1) / ((r+1)(n-1)+1)), exact integer arithmetic.
std::uint64_t volume_lower(int n, int r);

// 1/r, the density floor for single-insertion covering codes.
Rational density_lower_1r(int r);

// ceil(n^r / r), the count form of density_lower_1r.
std::uint64_t density_lower_count(int n, int r);

// floor(7 n^(r+1) / ((r+1)(n-1)+1)), the finite-n upper bound on S(n,r+1,r).
std::uint64_t lenz_upper(int n, int r);

struct NamedBound {
  std::string name;
  std::string quantity;   // "s(r+1,r)", "t(r+1,r)" or "S(n,r+1,r)"
  double value = 0.0;     // already rounded toward the safe side
  Rounding direction = Rounding::down;
  bool conditional = false;  // valid only for sufficiently large r
  std::string note;
  std::optional<Rational> exact;  // set when the bound is rational

  std::string display() const;
};

// 7/(r+1), 6.239/(r+1) and the asymptotic 4.911/(r+1) (tagged conditional).
// Requires r >= 2.
std::vector<NamedBound> upper_bounds(int r);

// (5r - sqrt(9r^2 + 24r) + 12) / (2r(r+3)), rounded down. Odd r >= 3.
double chung_lu_odd(int r);

// Smallest prime factor of m >= 2.
int least_prime_factor(int m);

// 1/r + (1 - 1/r^(p-1)) (r-1)^2 / (2 r^p (C(r+p, p-1) + C(r+1, 2))), p the
// least prime factor of r-1. Even r >= 4.
Rational lu_zhao_even_exact(int r);
double lu_zhao_even(int r);  // rounded down

// s + 2 r! sqrt(r(r+1)(1-s)(s-1/r)), rounded up; returns s unchanged when the
// radical vanishes. Requires r >= 3 and 1/r <= s <= 1 (s equal to the double
// nearest 1/r is accepted as the left endpoint).
double tr_sr_rhs(double s, int r);

// Least s in [1/r, t] with tr_sr_rhs(s, r) >= t, by bisection in 50-digit
// arithmetic (at most 200 halvings, stopped once the bracket is below double
// resolution). t <= 1/r returns 1/r.
double invert_tr_sr(double t_lower, int r);

// 1/r + (sqrt(t_r + R^2) - R)^2 with t_r = t - 1/r and R = r * r!, rounded
// down. Never exceeds invert_tr_sr(t, r).
double s_lower_closed(double t_lower, int r);

struct BoundReport {
  int r = 0;
  std::optional<int> n;
  std::vector<NamedBound> lower_bounds;
  std::vector<NamedBound> upper_bounds;

  // Every unconditional lower bound of each quantity is at most every
  // unconditional upper bound of it; s-lower bounds also sit below
  // t-upper bounds because s <= t.
  bool consistent() const;

  double best_lower(const std::string& quantity) const;
  double best_upper(const std::string& quantity) const;
};

// Bounds for each r in r_list. `known_t_lowers` supplies additional lower
// bounds on t(r+1,r) (for instance 0.438334 at r = 3), which are pushed
// through invert_tr_sr and s_lower_closed. When n is given, integer bounds
// on S(n,r+1,r) are added.
std::vector<BoundReport> bounds_table(std::span<const int> r_list,
                                      const std::map<int, double>& known_t_lowers = {},
                                      std::optional<int> n = std::nullopt);

}  // namespace inscover
