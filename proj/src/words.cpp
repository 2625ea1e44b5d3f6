#include "fibword/words.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "fibword/fibnum.hpp"

namespace fibword {

Word Word::from_string(std::string_view s) {
  Word w;
  bool binary = true;
  for (char c : s)
    if (c != '0' && c != '1') {
      binary = false;
      break;
    }
  if (binary) {
    w.bits_.reserve(s.size());
    for (char c : s) w.bits_.push_back(c == '1');
  } else {
    w.binary_ = false;
    w.text_.assign(s);
  }
  return w;
}

Word Word::letter(char c) { return from_string(std::string_view(&c, 1)); }

char Word::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("Word::at");
  return binary_ ? (bits_[i] ? '1' : '0') : text_[i];
}

void Word::demote_to_text() {
  if (!binary_) return;
  text_.reserve(bits_.size());
  for (bool b : bits_) text_.push_back(b ? '1' : '0');
  bits_.clear();
  bits_.shrink_to_fit();
  binary_ = false;
}

Word& Word::append(const Word& other) {
  if (binary_ && other.binary_) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    return *this;
  }
  demote_to_text();
  if (other.binary_) {
    text_.reserve(text_.size() + other.bits_.size());
    for (bool b : other.bits_) text_.push_back(b ? '1' : '0');
  } else {
    text_.append(other.text_);
  }
  return *this;
}

std::size_t Word::count(char c) const {
  if (binary_) {
    std::size_t ones = 0;
    for (bool b : bits_) ones += b;
    if (c == '1') return ones;
    if (c == '0') return bits_.size() - ones;
    return 0;
  }
  return static_cast<std::size_t>(std::count(text_.begin(), text_.end(), c));
}

std::string Word::str() const {
  if (!binary_) return text_;
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool Word::operator==(const Word& other) const {
  if (size() != other.size()) return false;
  if (binary_ == other.binary_) return binary_ ? bits_ == other.bits_ : text_ == other.text_;
  for (std::size_t i = 0; i < size(); ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

Word fib_word(int n) {
  if (n < 1) throw std::domain_error("fib_word: table indexing starts at F_1");
  if (fib(n) > kMaxWordLength) throw std::length_error("fib_word: word too long to materialize");
  Word prev = Word::from_string("1");  // F_1
  if (n == 1) return prev;
  Word cur = Word::from_string("0");  // F_2
  for (int k = 3; k <= n; ++k) {
    Word next = cur;
    next.append(prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word fib_word_s01(int n) {
  if (n < 0) throw std::domain_error("fib_word_s01: index starts at 0");
  return fib_word(n + 2);
}

namespace {

Word seeded_fib_word(const Word& u, const Word& v, int n, bool reverse) {
  if (u.empty() || v.empty())
    throw std::domain_error("seeded Fibonacci words require nonempty u, v");
  if (n < 1) throw std::domain_error("seeded Fibonacci words: n >= 1");
  if (n == 1) return u;
  Word prev = u, cur = v;
  for (int k = 3; k <= n; ++k) {
    if (prev.size() + cur.size() > kMaxWordLength)
      throw std::length_error("seeded Fibonacci word too long to materialize");
    Word next = reverse ? prev : cur;  // f_n = f_{n-1} f_{n-2}; f'_n = f'_{n-2} f'_{n-1}
    next.append(reverse ? cur : prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Word std_fib_word(const Word& u, const Word& v, int n) {
  return seeded_fib_word(u, v, n, false);
}

Word rev_fib_word(const Word& u, const Word& v, int n) {
  return seeded_fib_word(u, v, n, true);
}

BigNat grid_length(long u, long v, const BigNat& len_a, const BigNat& len_b) {
  if (u < 0 || v < 0) throw std::domain_error("grid_length: negative coordinates");
  if (u == 0) return len_a;
  if (v == 0) return len_b;
  std::vector<BigNat> row(static_cast<std::size_t>(v) + 1, len_a);  // row u=0
  for (long i = 1; i <= u; ++i) {
    BigNat left = len_b;  // column v=0
    for (long j = 1; j <= v; ++j) {
      left += row[static_cast<std::size_t>(j)];  // T(i-1,j) + T(i,j-1)
      row[static_cast<std::size_t>(j)] = left;
    }
  }
  return row[static_cast<std::size_t>(v)];
}

Word grid_word(long u, long v, const Word& a, const Word& b) {
  if (a.empty() || b.empty()) throw std::domain_error("grid_word: boundary words must be nonempty");
  if (u < 0 || v < 0) throw std::domain_error("grid_word: negative coordinates");
  if (u == 0) return a;
  if (v == 0) return b;
  if (grid_length(u, v, BigNat(a.size()), BigNat(b.size())) > kMaxGridWordLength)
    throw std::length_error("grid_word: materialization limit is 1e7 symbols");
  std::vector<Word> row(static_cast<std::size_t>(v) + 1, a);  // row u=0
  for (long i = 1; i <= u; ++i) {
    Word left = b;  // column v=0
    for (long j = 1; j <= v; ++j) {
      Word cell = row[static_cast<std::size_t>(j)];  // T(i-1, j)
      cell.append(left);                             // T(i, j-1)
      row[static_cast<std::size_t>(j)] = cell;
      left = std::move(cell);
    }
  }
  return row[static_cast<std::size_t>(v)];
}

double grid_growth(int N) {
  if (N < 1 || N > 5000) throw std::domain_error("grid_growth: N in [1,5000]");
  const std::size_t width = static_cast<std::size_t>(N) + 1;
  std::vector<double> row(width, 0.0);  // log l(0,v) = 0
  std::vector<double> next(width, 0.0);
  auto log_add = [](double x, double y) {
    double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
  };
  for (int i = 1; i <= N; ++i) {
    next[0] = 0.0;  // log l(u,0) = 0
    for (std::size_t j = 1; j < width; ++j) next[j] = log_add(next[j - 1], row[j]);
    row.swap(next);
  }
  return row[width - 1] / N;
}

CorrelationVector correlation(const Word& u, const Word& v) {
  const std::size_t n = u.size(), m = v.size();
  if (n < 1 || n > m)
    throw std::invalid_argument("correlation: require 1 <= |u| <= |v| (argument order)");
  CorrelationVector c;
  c.bits.resize(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n - k; ++i) {
      if (u.at(k + i) != v.at(i)) {
        c.bits[k] = 0;
        break;
      }
    }
  }
  return c;
}

DensityValue ones_density(const Word& w) {
  if (w.empty()) throw std::domain_error("ones_density: empty word");
  const double d = static_cast<double>(w.count('1')) / static_cast<double>(w.size());
  return DensityValue{d, DensityMethod::kEmpirical,
                      "length=" + std::to_string(w.size())};
}

DensityValue df_pair(int n, int m) {
  if (n < 1 || m < 1) throw std::domain_error("df_pair: indices must be >= 1");
  const auto gc = GoldenConstants::standard();
  const int g = std::gcd(n, m);
  const double value = 1.0 / (gc.phi * gc.phi * g);
  return DensityValue{value, DensityMethod::kClosedForm,
                      "n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                          ",gcd=" + std::to_string(g)};
}

long pisano_period(long modulus) {
  if (modulus < 2) throw std::domain_error("pisano_period: modulus >= 2");
  long a = 0, b = 1, period = 0;
  do {
    long t = (a + b) % modulus;
    a = b;
    b = t;
    ++period;
  } while (!(a == 0 && b == 1));
  return period;
}

DensityValue residue_density(long m, int lambda) {
  if (m < 2 || lambda < 1) throw std::domain_error("residue_density: m >= 2, lambda >= 1");
  long modulus = 1;
  for (int i = 0; i < lambda; ++i) {
    modulus *= m;
    if (modulus > 1'000'000) throw std::domain_error("residue_density: m^lambda exceeds 1e6");
  }
  const long period = pisano_period(modulus);
  std::vector<bool> seen(static_cast<std::size_t>(modulus), false);
  long a = 0, b = 1, distinct = 0;
  for (long i = 0; i < period; ++i) {
    if (!seen[static_cast<std::size_t>(a)]) {
      seen[static_cast<std::size_t>(a)] = true;
      ++distinct;
    }
    long t = (a + b) % modulus;
    a = b;
    b = t;
  }
  const double d = static_cast<double>(distinct) / static_cast<double>(modulus);
  return DensityValue{d, DensityMethod::kEmpirical,
                      "m=" + std::to_string(m) + ",lambda=" + std::to_string(lambda) +
                          ",pisano=" + std::to_string(period)};
}

void write_word_export(std::ostream& os, int n) {
  if (n < 1) throw std::domain_error("word export: n >= 1");
  os << "Fibonacci words from F_1 to F_" << n << ":\n\n";
  Word prev = Word::from_string("1"), cur = Word::from_string("0");
  for (int k = 1; k <= n; ++k) {
    const Word& w = (k == 1) ? prev : cur;
    os << "F_" << k << " (length " << w.size() << "): " << w.str() << "\n";
    if (k >= 2) {
      Word next = cur;
      next.append(prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
}

}  // namespace fibword
