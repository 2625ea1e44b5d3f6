#include "fibword/fibnum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fibword {

GoldenConstants GoldenConstants::standard() {
  const double s5 = std::sqrt(5.0);
  return GoldenConstants{(1.0 + s5) / 2.0, (1.0 - s5) / 2.0, s5};
}

Real100 hp_sqrt5() { return sqrt(Real100(5)); }
Real100 hp_phi() { return (1 + hp_sqrt5()) / 2; }
Real100 hp_psi() { return 1 - hp_phi(); }
Real100 hp_e() { return exp(Real100(1)); }

BigNat fib(long n) {
  if (n < 0) throw std::domain_error("fib: index must be nonnegative");
  BigNat a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    BigNat t = a + b;
    a = b;
    b = t;
  }
  return a;
}

BigInt fib_signed(long n) {
  if (n >= 0) return fib(n);
  const long j = -n;
  BigInt v = fib(j);
  return (j % 2 == 0) ? -v : v;
}

BigNat fib_classic(long n) {
  if (n < 1) throw std::domain_error("fib_classic: index starts at 1");
  return fib(n);
}

double fib_binet(long n) {
  if (n < 0 || n > kBinetMaxIndex)
    throw std::domain_error("fib_binet: index outside double-precision range [0,70]");
  // Extended precision keeps the worst-case error around 1e-4 at n = 70,
  // where plain doubles already drift to ~0.44.
  const long double s5 = sqrtl(5.0L);
  const long double phi = (1.0L + s5) / 2.0L;
  const long double psi = (1.0L - s5) / 2.0L;
  return static_cast<double>((powl(phi, n) - powl(psi, n)) / s5);
}

BigNat lucas(long m) {
  if (m < 1) throw std::domain_error("lucas: index must be >= 1");
  return fib(m - 1) + fib(m + 1);
}

BigNat gen_fib(long p, long n) {
  if (p < 1) throw std::domain_error("gen_fib: p must be >= 1");
  if (n < -p + 2) throw std::domain_error("gen_fib: index below -p+2");
  // Window of the last p values, seeded with the p-1 zeros and F_{p,1} = 1.
  std::vector<BigNat> window(static_cast<std::size_t>(p), BigNat(0));
  auto at = [&](long idx) -> BigNat& {
    // idx ranges over -p+2 .. n; window holds the last p values cyclically.
    long pos = idx - (-p + 2);
    return window[static_cast<std::size_t>(pos % p)];
  };
  if (n <= 0) return 0;
  at(1) = 1;
  if (n == 1) return 1;
  BigNat running = 1;  // sum of window contents = F_{p,k-1} + ... + F_{p,k-p}
  BigNat value = 0;
  for (long k = 2; k <= n; ++k) {
    value = running;
    running += value - at(k);  // slide the window: drop F_{p,k-p}, add F_{p,k}
    at(k) = value;
  }
  return value;
}

BigNat fib_gcd(long m, long n) {
  if (m < 1 || n < 1) throw std::domain_error("fib_gcd: indices must be >= 1");
  return gcd(fib(m), fib(n));
}

}  // namespace fibword
