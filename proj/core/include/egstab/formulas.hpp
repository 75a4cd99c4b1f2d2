#pragma once

#include <cstdint>
#include <stdexcept>

namespace egstab {

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

/// Binomial coefficient, 0 whenever b < 0 or b > a; exact.
long long binom(long long a, long long b);

/// ell = floor((k-1)/2); the k >= 5 gate matches the bound formulas below.
int ell(int k);

/// Number of s-cliques of H(n,k,a): C(k-a,s) + (n-k+a)*C(a,s-1).
long long h_s(long long n, long long k, long long a, long long s);

/// f_s(n,k,r) = C(k-l,s) + C(l+1,s) - C(l-r+1,s) + (n-k+l-r)*C(l-r+1,s-1).
long long f_s(long long n, long long k, long long r, long long s);

/// Number of s-cliques of G(n,k,3) (see build_gnk3): two K_{l+1} blocks, the
/// edge blocks and the parity block all glued on one shared triangle.
long long g_s(long long n, long long k, long long s);

/// Coarser variant whose parity term does not discount the shared triangle:
/// upper bound of g_s, equal exactly when n-k+3 is even.
long long g_s_upper(long long n, long long k, long long s);

/// max{h_s(n,k,a1), h_s(n,k,a2)}.
long long bound_pair_max(long long n, long long k, long long a1, long long a2, long long s);

/// Exact rational with normalized sign and gcd.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  bool operator==(const Rational&) const = default;
};

// compares lhs (integer) against r
bool leq(long long lhs, const Rational& r);

/// Edge bound for 2-connected graphs whose longest a-b path has at most r
/// vertices: (r-3)(n-2)/2 + 2n - 3.
Rational fan_bound(int r, long long n);

/// Edge bound for graphs with circumference below k: (k-1)(n-1)/2.
Rational eg_bound(int k, long long n);

/// x*C(r-1,s) + C(t+2,s) where n-2 = x(r-3) + t, 0 <= t <= r-4.
long long conjecture_bound(long long n, int r, int s);

}  // namespace egstab
