#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fibword/arith.hpp"

namespace fibword {

// Finite word over an alphabet. Binary words (alphabet {0,1}) are stored as a
// packed bit sequence; anything else falls back to a byte string. F_40 as a
// word has ~1e8 symbols, so the packed path matters.
class Word {
 public:
  Word() = default;

  static Word from_string(std::string_view s);
  static Word letter(char c);

  std::size_t size() const { return binary_ ? bits_.size() : text_.size(); }
  bool empty() const { return size() == 0; }
  bool is_binary() const { return binary_; }

  char at(std::size_t i) const;

  Word& append(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  std::size_t count(char c) const;
  std::string str() const;

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

 private:
  void demote_to_text();

  bool binary_ = true;
  std::vector<bool> bits_;
  std::string text_;
};

// Correlation of u over v (u no longer than v): bits[k] = 1 iff the length
// n-k suffix of u equals the length n-k prefix of v.
struct CorrelationVector {
  std::vector<std::uint8_t> bits;
};

enum class DensityMethod { kClosedForm, kEmpirical };

struct DensityValue {
  double value;  // in [0,1]
  DensityMethod method;
  std::string params;
};

// Materialization guards. Word constructions refuse to build anything longer;
// lengths themselves are always available exactly via grid_length / fib.
inline constexpr std::size_t kMaxWordLength = 200'000'000;  // fib_word up to F_41
inline constexpr std::size_t kMaxGridWordLength = 10'000'000;

// Fibonacci words, table convention: F_1 = "1", F_2 = "0", F_n = F_{n-1} F_{n-2}.
Word fib_word(int n);

// The introduction's alternative indexing: S_0 = "0", S_1 = "01",
// S_n = S_{n-1} S_{n-2}; satisfies S_n == fib_word(n+2).
Word fib_word_s01(int n);

// Standard generalized Fibonacci words over nonempty seeds u, v:
// f_1 = u, f_2 = v, f_n = f_{n-1} f_{n-2}.
Word std_fib_word(const Word& u, const Word& v, int n);

// Reverse variant: f'_n = f'_{n-2} f'_{n-1}.
Word rev_fib_word(const Word& u, const Word& v, int n);

// Two-dimensional grid words, single-track reading: T(0,v) = a, T(u,0) = b,
// T(u,v) = T(u-1,v) T(u,v-1). T(0,0) resolves to a.
Word grid_word(long u, long v, const Word& a, const Word& b);

// Exact length of T(u,v) given boundary lengths; satisfies the Pascal
// recurrence, so grid_length(u,v,1,1) == binomial(u+v, u).
BigNat grid_length(long u, long v, const BigNat& len_a, const BigNat& len_b);

// (1/N) ln len(N,N) with all-ones boundary, computed in log-space. N <= 5000.
double grid_growth(int N);

CorrelationVector correlation(const Word& u, const Word& v);

// Fraction of '1' symbols (empirical density). Word must be nonempty.
DensityValue ones_density(const Word& w);

// Closed-form subword density 1/(phi^2 * gcd(n,m)), n, m >= 1.
DensityValue df_pair(int n, int m);

// Fraction of residues mod m^lambda attained by the Fibonacci sequence over
// one Pisano period. Requires m >= 2, lambda >= 1, m^lambda <= 1e6.
DensityValue residue_density(long m, int lambda);

// Period of the Fibonacci sequence modulo modulus (modulus >= 2).
long pisano_period(long modulus);

// Word-export file format: two-line header, then one line per word.
void write_word_export(std::ostream& os, int n);

}  // namespace fibword
