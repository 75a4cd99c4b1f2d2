#include "egstab/formulas.hpp"

#include <algorithm>
#include <numeric>

namespace egstab {

namespace {

constexpr __int128 kFitLimit = static_cast<__int128>(1) << 62;

long long narrowed(__int128 v, const char* what) {
  if (v > kFitLimit || v < -kFitLimit) throw OutOfDomain(std::string(what) + " overflows");
  return static_cast<long long>(v);
}

}  // namespace

long long binom(long long a, long long b) {
  if (b < 0 || b > a || a < 0) return 0;
  b = std::min(b, a - b);
  __int128 acc = 1;
  for (long long i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;
    if (acc > kFitLimit) throw OutOfDomain("binomial overflow");
  }
  return static_cast<long long>(acc);
}

int ell(int k) {
  if (k < 5) throw OutOfDomain("ell needs k >= 5");
  return (k - 1) / 2;
}

long long h_s(long long n, long long k, long long a, long long s) {
  if (!(n >= k && k >= 2 * a && a >= 1 && s >= 2)) throw OutOfDomain("h_s needs n >= k >= 2a >= 2, s >= 2");
  return narrowed(static_cast<__int128>(binom(k - a, s)) +
                      static_cast<__int128>(n - k + a) * binom(a, s - 1),
                  "h_s");
}

long long f_s(long long n, long long k, long long r, long long s) {
  if (k < 9 || n < k || s < 2) throw OutOfDomain("f_s needs n >= k >= 9, s >= 2");
  long long l = ell(static_cast<int>(k));
  if (r < 1 || r > l - 2) throw OutOfDomain("f_s needs 1 <= r <= ell-2");
  return narrowed(static_cast<__int128>(binom(k - l, s)) + binom(l + 1, s) -
                      binom(l - r + 1, s) +
                      static_cast<__int128>(n - k + l - r) * binom(l - r + 1, s - 1),
                  "f_s");
}

namespace {

long long g_s_impl(long long n, long long k, long long s, bool exact) {
  if (k < 10 || k % 2 != 0) throw OutOfDomain("g_s needs even k >= 10");
  if (n < k || s < 2) throw OutOfDomain("g_s needs n >= k, s >= 2");
  long long l = ell(static_cast<int>(k));
  long long pairs = (n - k + 3) / 2;
  long long i = (n - k + 3) % 2;
  long long parity_term = i * (binom(4, s) - (exact ? binom(3, s) : 0));
  return narrowed(2 * static_cast<__int128>(binom(l + 1, s)) - binom(3, s) +
                      static_cast<__int128>(pairs) * (binom(5, s) - binom(3, s)) + parity_term,
                  "g_s");
}

}  // namespace

long long g_s(long long n, long long k, long long s) { return g_s_impl(n, k, s, true); }

long long g_s_upper(long long n, long long k, long long s) { return g_s_impl(n, k, s, false); }

long long bound_pair_max(long long n, long long k, long long a1, long long a2, long long s) {
  return std::max(h_s(n, k, a1, s), h_s(n, k, a2, s));
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw OutOfDomain("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool leq(long long lhs, const Rational& r) {
  return static_cast<__int128>(lhs) * r.den <= static_cast<__int128>(r.num);
}

Rational fan_bound(int r, long long n) {
  if (r < 4 || n < 2) throw OutOfDomain("fan_bound needs r >= 4, n >= 2");
  return Rational(static_cast<long long>(r - 3) * (n - 2) + 2 * (2 * n - 3), 2);
}

Rational eg_bound(int k, long long n) {
  if (k < 2 || n < 1) throw OutOfDomain("eg_bound needs k >= 2, n >= 1");
  return Rational(static_cast<long long>(k - 1) * (n - 1), 2);
}

long long conjecture_bound(long long n, int r, int s) {
  if (r < 4) throw OutOfDomain("conjecture_bound needs r >= 4");
  if (s < 2 || n < 2) throw OutOfDomain("conjecture_bound needs s >= 2, n >= 2");
  long long x = (n - 2) / (r - 3);
  long long t = (n - 2) % (r - 3);
  return narrowed(static_cast<__int128>(x) * binom(r - 1, s) + binom(t + 2, s),
                  "conjecture bound");
}

}  // namespace egstab
