#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace fibword {

// Exact integer arithmetic for sequence values and counts. BigNat is used
// where the value is nonnegative by construction (Fibonacci, Lucas, lengths);
// BigInt where signs occur (negative-index Fibonacci extension).
using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Working precision for the series oracles: ~100 significant decimal digits,
// far beyond what is needed to separate the disputed closed-form coefficients.
using Real100 = boost::multiprecision::cpp_bin_float_100;

Real100 hp_sqrt5();
Real100 hp_phi();  // (1+sqrt5)/2
Real100 hp_psi();  // 1-phi
Real100 hp_e();

}  // namespace fibword
