#include "acymatch/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "acymatch/error.hpp"

namespace acym {

namespace {

using i128 = __int128;

void require_nonneg(long long x, const char* what) {
  if (x < 0) fail(errc::negative_input, std::string(what) + " = " + std::to_string(x));
}

void require_delta(long long delta) {
  if (delta < 1) fail(errc::negative_input, "delta must be >= 1, got " + std::to_string(delta));
}

}  // namespace

bool cmp_le_plus_sqrt(long long a, long long b, long long c, long long delta) {
  require_nonneg(a, "a");
  require_nonneg(b, "b");
  require_nonneg(c, "c");
  require_delta(delta);
  if (a <= b) return true;
  i128 lhs = i128(a - b) * i128(a - b);
  i128 rhs = i128(c) * i128(c) * i128(delta);
  return lhs <= rhs;
}

bool meets_thm1(long long size, long long n, long long delta) {
  require_nonneg(size, "size");
  require_nonneg(n, "n");
  require_delta(delta);
  i128 t = i128(6) * n - i128(size) * delta * delta;
  if (t <= 0) return true;
  i128 rhs = i128(144) * size * size * delta * delta * delta;
  return t * t <= rhs;
}

double thm1_bound(long long n, long long delta) {
  require_nonneg(n, "n");
  require_delta(delta);
  double d = static_cast<double>(delta);
  return 6.0 * static_cast<double>(n) / (d * d + 12.0 * std::pow(d, 1.5));
}

double joos_bound(long long n, long long delta) {
  require_nonneg(n, "n");
  require_delta(delta);
  double den = static_cast<double>(delta / 2 + 1) * static_cast<double>((delta + 1) / 2 + 1);
  return static_cast<double>(n) / den;
}

double edge_lower_bound(long long m, long long delta) {
  require_nonneg(m, "m");
  require_delta(delta);
  return static_cast<double>(m) / (static_cast<double>(delta) * static_cast<double>(delta));
}

double regular_upper_bound(long long m, long long delta) {
  if (delta < 2) fail(errc::degree_too_small, "delta must be >= 2 for the regular upper bound");
  if (m < 1) fail(errc::negative_input, "m must be >= 1");
  return static_cast<double>(m - 1) / (2.0 * static_cast<double>(delta - 1));
}

double kdeg_conjecture_bound(long long n, long long delta, long long k) {
  require_nonneg(n, "n");
  require_delta(delta);
  if (k < 1) fail(errc::k_out_of_range, "k must be >= 1");
  double den = static_cast<double>(delta / 2 + 1) * static_cast<double>((delta + 1) / 2 + 1);
  return static_cast<double>(k + 1) * static_cast<double>(n) / den;
}

Rational kdeg_adapted_coefficient(int k) {
  if (k < 2) fail(errc::k_out_of_range, "coefficient defined for k >= 2");
  if (k <= 6) {
    long long num = 4LL * (k + 3), den = 3;
    long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
  }
  return Rational{static_cast<long long>(k) + 4, 1};
}

}  // namespace acym
