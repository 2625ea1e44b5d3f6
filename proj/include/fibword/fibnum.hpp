#pragma once

#include <cstdint>

#include "fibword/arith.hpp"

namespace fibword {

// Double-precision golden-ratio constants used by the floating-point helpers.
struct GoldenConstants {
  double phi;    // (1+sqrt5)/2
  double psi;    // 1-phi = -1/phi
  double sqrt5;

  static GoldenConstants standard();
};

// Largest index for which fib_binet is offered; phi^n/sqrt5 approaches the
// 2^53 integer ceiling shortly past this point.
inline constexpr long kBinetMaxIndex = 70;

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Exact.
BigNat fib(long n);

// Extension to negative indices: F_{-j} = (-1)^{j+1} F_j, which is the unique
// extension keeping the recurrence (and Binet's formula) valid for all n.
BigInt fib_signed(long n);

// The f_1 = f_2 = 1 indexing; equal to fib(n) for n >= 1.
BigNat fib_classic(long n);

// (phi^n - psi^n)/sqrt5 evaluated in extended precision internally.
// Throws std::domain_error for n < 0 or n > kBinetMaxIndex.
double fib_binet(long n);

// L_m = F_{m-1} + F_{m+1} = phi^m + psi^m, m >= 1.
BigNat lucas(long m);

// p-generalized Fibonacci numbers: sum of the previous p terms, with
// F_{p,n} = 0 for n = -p+2..0 and F_{p,1} = 1. Requires p >= 1, n >= -p+2.
BigNat gen_fib(long p, long n);

// gcd(F_m, F_n) computed by integer Euclid on the exact values (m, n >= 1).
// Equals fib(gcd(m, n)); the equality is checked by the claims harness,
// not assumed here.
BigNat fib_gcd(long m, long n);

}  // namespace fibword
