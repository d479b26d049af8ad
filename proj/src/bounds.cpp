#include "inscover/bounds.hpp"

#include "inscover/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace inscover {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

double round_down(const Float& x) {
  double d = static_cast<double>(x);
  if (Float(d) > x) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

double round_up(const Float& x) {
  double d = static_cast<double>(x);
  if (Float(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

Float to_float(const Rational& q) {
  return Float(numerator(q)) / Float(denominator(q));
}

BigInt big_pow(std::int64_t base, int exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw ResourceLimitError("bound does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

Float factorial(int r) {
  Float f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

void require_r(int r, int minimum, const char* what) {
  if (r < minimum)
    throw PreconditionError(std::string(what) + ": need r >= " + std::to_string(minimum));
}

// The left endpoint 1/r arrives as the nearest double, which may sit a hair
// off the real 1/r; treat it as the endpoint.
Float clamp_to_left_endpoint(double s, int r) {
  const Float exact_inv = Float(1) / r;
  if (s == 1.0 / r) return exact_inv;
  if (Float(s) < exact_inv) return Float(-1);
  return Float(s);
}

Float rhs_hp(const Float& s, int r) {
  const Float inv = Float(1) / r;
  const Float radical = Float(r) * (r + 1) * (1 - s) * (s - inv);
  if (radical <= 0) return s;
  return s + 2 * factorial(r) * sqrt(radical);
}

}  // namespace

std::string format_directed(double value, Rounding direction, int digits) {
  Float scaled = Float(value) * boost::multiprecision::pow(Float(10), digits);
  scaled = direction == Rounding::down ? floor(scaled) : ceil(scaled);
  BigInt units = static_cast<BigInt>(scaled);
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string text = units.str();
  if (text.size() <= static_cast<std::size_t>(digits))
    text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
  text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + text : text;
}

std::string format_directed(const Rational& value, Rounding direction, int digits) {
  const Rational scaled = value * Rational(big_pow(10, digits));
  BigInt units = numerator(scaled) / denominator(scaled);  // truncates toward zero
  const bool exact = units * denominator(scaled) == numerator(scaled);
  if (!exact && direction == Rounding::down && scaled < 0) units -= 1;
  if (!exact && direction == Rounding::up && scaled > 0) units += 1;
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string text = units.str();
  if (text.size() <= static_cast<std::size_t>(digits))
    text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
  text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + text : text;
}

std::string NamedBound::display() const {
  if (exact && denominator(*exact) == 1 && numerator(*exact) > 1) return numerator(*exact).str();
  return exact ? format_directed(*exact, direction) : format_directed(value, direction);
}

std::uint64_t volume_lower(int n, int r) {
  if (n < 1 || r < 1) throw PreconditionError("volume_lower: need n, r >= 1");
  const BigInt universe = big_pow(n, r + 1);
  const BigInt ball = BigInt(r + 1) * (n - 1) + 1;
  return to_u64((universe + ball - 1) / ball);
}

Rational density_lower_1r(int r) {
  require_r(r, 1, "density_lower_1r");
  return make_rational(1, r);
}

std::uint64_t density_lower_count(int n, int r) {
  if (n < 1) throw PreconditionError("density_lower_count: need n >= 1");
  require_r(r, 1, "density_lower_count");
  const BigInt words = big_pow(n, r);
  return to_u64((words + r - 1) / r);
}

std::uint64_t lenz_upper(int n, int r) {
  if (n < 1 || r < 1) throw PreconditionError("lenz_upper: need n, r >= 1");
  const BigInt ball = BigInt(r + 1) * (n - 1) + 1;
  return to_u64(7 * big_pow(n, r + 1) / ball);
}

namespace {

NamedBound exact_bound(std::string name, const char* quantity, const Rational& q, Rounding direction,
                       std::string note, bool conditional = false) {
  const Float f = to_float(q);
  const double value = direction == Rounding::down ? round_down(f) : round_up(f);
  return {std::move(name), quantity, value, direction, conditional, std::move(note), q};
}

}  // namespace

std::vector<NamedBound> upper_bounds(int r) {
  require_r(r, 2, "upper_bounds");
  return {
      exact_bound("lenz", "s(r+1,r)", make_rational(7, r + 1), Rounding::up, "7/(r+1)"),
      exact_bound("all_r", "s(r+1,r)", make_rational(6239, 1000 * (r + 1)), Rounding::up,
                  "6.239/(r+1), all r"),
      exact_bound("large_r", "s(r+1,r)", make_rational(4911, 1000 * (r + 1)), Rounding::up,
                  "asymptotic: 4.911/(r+1) valid only for sufficiently large r (threshold unspecified)", true),
  };
}

double chung_lu_odd(int r) {
  require_r(r, 3, "chung_lu_odd");
  if (r % 2 == 0) throw PreconditionError("chung_lu_odd: r must be odd");
  const Float rr = r;
  return round_down((5 * rr - sqrt(9 * rr * rr + 24 * rr) + 12) / (2 * rr * (rr + 3)));
}

int least_prime_factor(int m) {
  if (m < 2) throw PreconditionError("least_prime_factor: need m >= 2");
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) return p;
  return m;
}

Rational lu_zhao_even_exact(int r) {
  require_r(r, 4, "lu_zhao_even");
  if (r % 2 != 0) throw PreconditionError("lu_zhao_even: r must be even");
  const int p = least_prime_factor(r - 1);
  const Rational head = Rational(1) - Rational(BigInt(1), big_pow(r, p - 1));
  const Rational numer = head * BigInt((r - 1) * (r - 1));
  const BigInt denom = 2 * big_pow(r, p) * (binomial(r + p, p - 1) + binomial(r + 1, 2));
  return make_rational(1, r) + numer / Rational(denom);
}

double lu_zhao_even(int r) { return round_down(to_float(lu_zhao_even_exact(r))); }

double tr_sr_rhs(double s, int r) {
  require_r(r, 3, "tr_sr_rhs");
  const Float sv = clamp_to_left_endpoint(s, r);
  if (sv < 0 || s > 1.0)
    throw PreconditionError("tr_sr_rhs: s must lie in [1/r, 1]");
  const Float value = rhs_hp(sv, r);
  if (value == sv) return s;
  return round_up(value);
}

double invert_tr_sr(double t_lower, int r) {
  require_r(r, 3, "invert_tr_sr");
  if (t_lower > 1.0) throw PreconditionError("invert_tr_sr: t must not exceed 1");
  const Float target = t_lower;
  const Float inv = Float(1) / r;
  if (target <= inv) return 1.0 / r;

  Float lo = inv;
  Float hi = target;
  for (int i = 0; i < 200 && hi - lo > Float("1e-30"); ++i) {
    const Float mid = (lo + hi) / 2;
    if (rhs_hp(mid, r) >= target)
      hi = mid;
    else
      lo = mid;
  }
  double out = round_up(hi);
  while (out > 1.0 / r) {
    const double below = std::nextafter(out, 0.0);
    if (rhs_hp(Float(below), r) < target) break;
    out = below;
  }
  return out;
}

double s_lower_closed(double t_lower, int r) {
  require_r(r, 1, "s_lower_closed");
  const Float tv = clamp_to_left_endpoint(t_lower, r);
  if (tv < 0) throw PreconditionError("s_lower_closed: need t >= 1/r");
  const Float inv = Float(1) / r;
  const Float excess = tv - inv;
  if (excess <= 0) return 1.0 / r;
  const Float big_r = r * factorial(r);
  const Float root = sqrt(excess + big_r * big_r) - big_r;
  return round_down(inv + root * root);
}

namespace {

constexpr const char* kDensityS = "s(r+1,r)";
constexpr const char* kDensityT = "t(r+1,r)";
constexpr const char* kCountS = "S(n,r+1,r)";

NamedBound lower(std::string name, const char* quantity, double value, std::string note) {
  return {std::move(name), quantity, value, Rounding::down, false, std::move(note), std::nullopt};
}

NamedBound lower(std::string name, const char* quantity, const Rational& q, std::string note) {
  return exact_bound(std::move(name), quantity, q, Rounding::down, std::move(note));
}

NamedBound upper(std::string name, const char* quantity, const Rational& q, std::string note,
                 bool conditional = false) {
  return exact_bound(std::move(name), quantity, q, Rounding::up, std::move(note), conditional);
}

}  // namespace

double BoundReport::best_lower(const std::string& quantity) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& b : lower_bounds)
    if (b.quantity == quantity && !b.conditional) best = std::max(best, b.value);
  return best;
}

double BoundReport::best_upper(const std::string& quantity) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : upper_bounds)
    if (b.quantity == quantity && !b.conditional) best = std::min(best, b.value);
  return best;
}

bool BoundReport::consistent() const {
  for (const char* q : {kDensityS, kDensityT, kCountS})
    if (best_lower(q) > best_upper(q)) return false;
  return best_lower(kDensityS) <= best_upper(kDensityT);
}

std::vector<BoundReport> bounds_table(std::span<const int> r_list,
                                      const std::map<int, double>& known_t_lowers,
                                      std::optional<int> n) {
  std::vector<BoundReport> table;
  for (int r : r_list) {
    require_r(r, 1, "bounds_table");
    BoundReport rep;
    rep.r = r;
    rep.n = n;
    const Float inv = Float(1) / r;

    rep.lower_bounds.push_back(lower("volume", kDensityS, make_rational(1, r + 1), "1/(r+1)"));
    rep.lower_bounds.push_back(lower("one_over_r", kDensityS, make_rational(1, r), "1/r"));
    rep.upper_bounds.push_back(upper("trivial", kDensityS, Rational(1), "density at most 1"));

    if (r >= 2) {
      for (auto& b : upper_bounds(r)) rep.upper_bounds.push_back(std::move(b));

      rep.lower_bounds.push_back(lower("de_caen", kDensityT, make_rational(1, r), "1/r"));
      std::vector<NamedBound> turan_lowers;
      if (r % 2 == 1 && r >= 3)
        turan_lowers.push_back(lower("chung_lu", kDensityT, chung_lu_odd(r),
                                     "(5r - sqrt(9r^2+24r) + 12)/(2r(r+3))"));
      if (r % 2 == 0 && r >= 4)
        turan_lowers.push_back(lower("lu_zhao", kDensityT, lu_zhao_even_exact(r),
                                     "least prime factor p of r-1"));
      if (auto it = known_t_lowers.find(r); it != known_t_lowers.end())
        turan_lowers.push_back(lower("supplied", kDensityT, it->second, "caller-supplied t lower bound"));

      if (r >= 3) {
        for (const auto& t : turan_lowers) {
          if (t.value > 1.0 || Float(t.value) <= inv) continue;
          const double inverted = invert_tr_sr(t.value, r);
          rep.lower_bounds.push_back(
              lower("inverted_" + t.name, kDensityS,
                    std::nextafter(inverted, -std::numeric_limits<double>::infinity()),
                    "least s with s + 2r! sqrt(r(r+1)(1-s)(s-1/r)) >= " + t.display()));
          rep.lower_bounds.push_back(lower("closed_form_" + t.name, kDensityS,
                                           s_lower_closed(t.value, r),
                                           "1/r + (sqrt(t-1/r + R^2) - R)^2, R = r r!"));
        }
      }
      for (auto& t : turan_lowers) rep.lower_bounds.push_back(std::move(t));

      rep.upper_bounds.push_back(upper("trivial", kDensityT, Rational(1), "density at most 1"));
      rep.upper_bounds.push_back(upper("all_r", kDensityT, make_rational(6239, 1000 * (r + 1)),
                                       "6.239/(r+1), all r"));
      rep.upper_bounds.push_back(upper("large_r", kDensityT, make_rational(4911, 1000 * (r + 1)),
                                       "asymptotic: sufficiently large r only", true));
      if (r == 2) {
        rep.upper_bounds.push_back(upper("mantel", kDensityT, make_rational(1, 2), "two disjoint cliques"));
        rep.upper_bounds.push_back(upper("half_cube", kDensityS, make_rational(1, 2), "s <= t(3,2) = 1/2"));
      }
      if (r == 3) {
        rep.upper_bounds.push_back(upper("three_part", kDensityT, make_rational(4, 9), "4/9"));
        rep.upper_bounds.push_back(upper("three_part", kDensityS, make_rational(4, 9), "s <= t(4,3) <= 4/9"));
      }
    }

    if (n) {
      rep.lower_bounds.push_back(lower("volume", kCountS, Rational(BigInt(volume_lower(*n, r))), "ceil(n^(r+1)/((r+1)(n-1)+1))"));
      rep.lower_bounds.push_back(
          lower("one_over_r", kCountS, Rational(BigInt(density_lower_count(*n, r))), "ceil(n^r/r)"));
      rep.upper_bounds.push_back(
          upper("lenz", kCountS, Rational(BigInt(lenz_upper(*n, r))), "floor(7n^(r+1)/((r+1)(n-1)+1))"));
      const BigInt all = big_pow(*n, r);
      rep.upper_bounds.push_back(upper("trivial", kCountS, Rational(all), "n^r"));
    }
    table.push_back(std::move(rep));
  }
  return table;
}

}  // namespace inscover
