#include "helpers.hpp"
#include "inscover/bounds.hpp"
#include "inscover/errors.hpp"
#include "inscover/solvers.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace inscover;

namespace {

// Reference values computed independently at 50 significant digits.
constexpr double kInvert0438334 = 0.33334290216045613767;
constexpr double kChungLu3 = 0.40640786453186162085;  // (27 - sqrt(153)) / 36
constexpr double kChungLu5 = 0.23032280473741612536;
constexpr double kChungLu7 = 0.15944339029638477195;

long double rhs_ld(long double s, int r) {
  long double f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  const long double rad = r * (r + 1) * (1 - s) * (s - 1.0L / r);
  return s + 2 * f * std::sqrt(std::max(rad, 0.0L));
}

Rational lu_zhao_reference(int r) {
  int p = 2;
  while ((r - 1) % p != 0) ++p;
  BigInt rp = 1;
  for (int i = 0; i < p; ++i) rp *= r;
  const Rational head = 1 - Rational(BigInt(r), rp);
  const BigInt denom = 2 * rp * (BigInt(oracle::binomial(r + p, p - 1)) + BigInt(oracle::binomial(r + 1, 2)));
  return make_rational(1, r) + head * Rational(BigInt((r - 1) * (r - 1)), denom);
}

}  // namespace

TEST_CASE("invert_tr_sr at the known t(4,3) lower bound") {
  const double s = invert_tr_sr(0.438334, 3);
  CHECK(s >= 0.3333420);
  CHECK(s <= 0.3333440);
  CHECK(s == doctest::Approx(kInvert0438334).epsilon(1e-14));
  CHECK(tr_sr_rhs(s, 3) >= 0.438334);
  CHECK(rhs_ld(std::nextafter(s, 0.0), 3) < 0.438334L);
  CHECK(format_directed(std::nextafter(s, 0.0), Rounding::down) == "0.3333429");
}

TEST_CASE("tr_sr_rhs is the identity at s = 1/r and at s = 1") {
  for (int r = 3; r <= 10; ++r) {
    CHECK(tr_sr_rhs(1.0 / r, r) == 1.0 / r);
    CHECK(tr_sr_rhs(1.0, r) == 1.0);
  }
  CHECK_THROWS_AS(tr_sr_rhs(0.2, 3), PreconditionError);
  CHECK_THROWS_AS(tr_sr_rhs(0.5, 2), PreconditionError);
}

TEST_CASE("tr_sr_rhs rounds up and is increasing near 1/r") {
  for (int r = 3; r <= 6; ++r) {
    double prev = 1.0 / r;
    for (double s = 1.0 / r + 1e-7; s < 1.0 / r + 1e-3; s += 3e-5) {
      const double v = tr_sr_rhs(s, r);
      CHECK(v >= rhs_ld(s, r) * (1 - 1e-15L));
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("inversion round trip") {
  for (int r = 3; r <= 7; ++r)
    for (double t : {0.3, 0.35, 0.4, 0.45, 0.6, 0.9}) {
      if (t <= 1.0 / r) {
        CHECK(invert_tr_sr(t, r) == 1.0 / r);
        continue;
      }
      const double s = invert_tr_sr(t, r);
      CHECK(tr_sr_rhs(s, r) >= t);
      CHECK(tr_sr_rhs(s, r) <= t + 1e-6);
      CHECK(rhs_ld(std::nextafter(s, 0.0), r) < t);
      CHECK(s_lower_closed(t, r) <= s);
      CHECK(s_lower_closed(t, r) >= 1.0 / r);
    }
}

TEST_CASE("closed-form lower bound at the known t(4,3) bound") {
  const double s = s_lower_closed(0.438334, 3);
  CHECK(s == doctest::Approx(0.33334183900).epsilon(1e-10));
  CHECK(s <= invert_tr_sr(0.438334, 3));
}

TEST_CASE("odd-r Turan lower bound") {
  CHECK(std::abs(chung_lu_odd(3) - kChungLu3) < 1e-9);
  CHECK(chung_lu_odd(3) <= kChungLu3);
  CHECK(std::abs(chung_lu_odd(5) - kChungLu5) < 1e-15);
  CHECK(std::abs(chung_lu_odd(7) - kChungLu7) < 1e-15);
  for (int r = 3; r <= 21; r += 2) {
    CHECK(chung_lu_odd(r) > 1.0 / r);
    const double excess = chung_lu_odd(r) - 1.0 / r - 1.0 / (r * r);
    CHECK(std::abs(excess) * r * r * r < 5.0);
  }
  CHECK_THROWS_AS(chung_lu_odd(4), PreconditionError);
  CHECK_THROWS_AS(chung_lu_odd(1), PreconditionError);
}

TEST_CASE("even-r Turan lower bound") {
  CHECK(lu_zhao_even_exact(4) == make_rational(1, 4) + make_rational(135, 63488));
  for (int r = 4; r <= 20; r += 2) {
    CHECK(lu_zhao_even_exact(r) == lu_zhao_reference(r));
    CHECK(lu_zhao_even(r) <= to_double(lu_zhao_even_exact(r)));
    CHECK(lu_zhao_even_exact(r) > make_rational(1, r));
  }
  CHECK_THROWS_AS(lu_zhao_even(5), PreconditionError);
  CHECK(least_prime_factor(15) == 3);
  CHECK(least_prime_factor(49) == 7);
  CHECK(least_prime_factor(13) == 13);
}

TEST_CASE("count bounds") {
  CHECK(volume_lower(3, 3) == 9);
  CHECK(volume_lower(2, 2) == 2);
  CHECK(density_lower_count(3, 3) == 9);
  CHECK(density_lower_count(4, 3) == 22);
  CHECK(lenz_upper(3, 3) == 63);
  CHECK(density_lower_1r(3) == make_rational(1, 3));
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= 5; ++r) {
      const auto universe = power_checked(static_cast<std::uint64_t>(n), static_cast<std::size_t>(r) + 1);
      const auto ball = static_cast<std::uint64_t>((r + 1) * (n - 1) + 1);
      CHECK(volume_lower(n, r) == (universe + ball - 1) / ball);
      CHECK(lenz_upper(n, r) == 7 * universe / ball);
    }
}

TEST_CASE("solved values sit between the count bounds") {
  for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3},
                      std::pair{2, 3}, std::pair{4, 3}, std::pair{2, 4}}) {
    const auto s = min_cover(n, r + 1, r).optimum;
    CHECK(s >= volume_lower(n, r));
    CHECK(s >= density_lower_count(n, r));
    CHECK(s <= lenz_upper(n, r));
  }
}

TEST_CASE("directed decimal formatting") {
  CHECK(format_directed(1.0 / 3, Rounding::down) == "0.3333333");
  CHECK(format_directed(1.0 / 3, Rounding::up) == "0.3333334");
  CHECK(format_directed(0.5, Rounding::down) == "0.5000000");
  CHECK(format_directed(0.5, Rounding::up) == "0.5000000");
  CHECK(format_directed(12.0, Rounding::up, 2) == "12.00");
  CHECK(format_directed(4.0 / 9, Rounding::up, 3) == "0.445");
  CHECK(format_directed(make_rational(6239, 4000), Rounding::up) == "1.5597500");
  CHECK(format_directed(make_rational(4, 9), Rounding::up) == "0.4444445");
  CHECK(format_directed(make_rational(4, 9), Rounding::down) == "0.4444444");
  CHECK(format_directed(make_rational(-1, 3), Rounding::down) == "-0.3333334");
  CHECK(format_directed(make_rational(-1, 3), Rounding::up) == "-0.3333333");
}

TEST_CASE("upper bound list") {
  const auto ub = upper_bounds(3);
  REQUIRE(ub.size() == 3);
  CHECK(ub[0].value >= 7.0 / 4);
  CHECK(ub[1].value >= 6.239 / 4);
  CHECK(ub[2].conditional);
  CHECK_FALSE(ub[0].conditional);
  for (const auto& b : ub) CHECK(b.direction == Rounding::up);
  CHECK_THROWS_AS(upper_bounds(1), PreconditionError);
}

TEST_CASE("every bounds table row is consistent") {
  std::vector<int> rs;
  for (int r = 1; r <= 14; ++r) rs.push_back(r);
  for (std::optional<int> n : {std::optional<int>{}, std::optional<int>{2}, std::optional<int>{5}}) {
    const auto table = bounds_table(rs, {{3, 0.438334}}, n);
    REQUIRE(table.size() == rs.size());
    for (const auto& row : table) {
      CAPTURE(row.r);
      CHECK(row.consistent());
      for (const auto& lo : row.lower_bounds)
        for (const auto& hi : row.upper_bounds)
          if (lo.quantity == hi.quantity && !lo.conditional && !hi.conditional) CHECK(lo.value <= hi.value);
    }
  }
  const auto r3 = bounds_table(std::vector<int>{3}, {{3, 0.438334}}).front();
  bool found = false;
  for (const auto& b : r3.lower_bounds) found |= b.display() == "0.3333429";
  CHECK(found);
  found = false;
  for (const auto& b : r3.upper_bounds) found |= b.display() == "1.5597500";
  CHECK(found);
  CHECK(r3.best_lower("s(r+1,r)") > 1.0 / 3);
}

TEST_CASE("an impossible supplied bound makes a row inconsistent") {
  const auto row = bounds_table(std::vector<int>{2}, {{2, 0.9}}).front();
  CHECK_FALSE(row.consistent());
}
