#pragma once

#include <cstdint>

namespace acym {

/// Exact test a <= b + c*sqrt(delta) for nonnegative integers: true when
/// a <= b, otherwise (a-b)^2 <= c^2*delta. Never touches floating point.
bool cmp_le_plus_sqrt(long long a, long long b, long long c, long long delta);

/// Exact test size*(delta^2 + 12*delta^{3/2}) >= 6n via squaring:
/// t = 6n - size*delta^2; true when t <= 0, else t^2 <= 144*size^2*delta^3.
bool meets_thm1(long long size, long long n, long long delta);

/// 6n / (delta^2 + 12*delta^{3/2}). Display value; assertions go through
/// meets_thm1 instead.
double thm1_bound(long long n, long long delta);

/// n / ((floor(delta/2)+1) * (ceil(delta/2)+1)).
double joos_bound(long long n, long long delta);

/// m / delta^2.
double edge_lower_bound(long long m, long long delta);

/// (m-1) / (2*(delta-1)); requires delta >= 2 and m >= 1.
double regular_upper_bound(long long m, long long delta);

/// (k+1)*n / ((floor(delta/2)+1) * (ceil(delta/2)+1)); requires k >= 1.
double kdeg_conjecture_bound(long long n, long long delta, long long k);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Coefficient c of the c/delta^2 guarantee for k-degenerate matchings:
/// 4(k+3)/3 for k in 2..6, k+4 for k >= 7. k < 2 is out of range.
Rational kdeg_adapted_coefficient(int k);

}  // namespace acym
