#pragma once

// Generators and independent oracles shared by the test binaries. Oracles
// avoid the library's own algorithms: naive evaluation, char-by-char machine
// runs, Cramer's rule, brute-force number theory.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdeg/fst.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/rational.hpp"
#include "tdeg/weight.hpp"

namespace tdeg::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with |num| <= max_num and den in [1, max_den].
  Rat rational(long min_num, long max_num, long max_den) {
    Rat r(integer(min_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Poly poly(int degree, long lo, long hi) {
    std::vector<Rat> cs;
    for (int i = 0; i <= degree; ++i) cs.emplace_back(integer(lo, hi));
    return Poly(std::move(cs));
  }

  /// Cubic with positive leading coefficient and small rational coefficients.
  Poly cubic() {
    std::vector<Rat> cs;
    for (int i = 0; i < 3; ++i) cs.push_back(rational(-9, 9, 99));
    cs.push_back(rational(1, 9, 99));
    return Poly(std::move(cs));
  }

  Weight weight(std::size_t k, long max_entry, long max_den, long max_const) {
    std::vector<Rat> es;
    for (std::size_t i = 0; i < k; ++i) es.push_back(rational(0, max_entry, max_den));
    return Weight(std::move(es), rational(0, max_const, max_den));
  }

  Weight natural_weight(std::size_t k, long max_entry, long max_const) { return weight(k, max_entry, 1, max_const); }

  BitWord word(std::size_t len) {
    BitWord w;
    for (std::size_t i = 0; i < len; ++i) w += coin() ? '1' : '0';
    return w;
  }

  Fst machine(std::size_t max_states, std::size_t max_out) {
    const std::size_t n = static_cast<std::size_t>(integer(1, static_cast<long>(max_states)));
    std::vector<std::array<Transition, 2>> table(n);
    for (auto& row : table)
      for (auto& t : row) {
        t.to = static_cast<StateId>(integer(0, static_cast<long>(n) - 1));
        t.out = word(static_cast<std::size_t>(integer(0, static_cast<long>(max_out))));
      }
    return Fst(std::move(table), static_cast<StateId>(integer(0, static_cast<long>(n) - 1)));
  }

 private:
  std::mt19937_64 gen_;
};

// ---- oracles ----

inline Rat naive_eval(const Poly& p, const Rat& x) {
  Rat sum = 0;
  Rat power = 1;
  for (const Rat& c : p.coeffs()) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

/// Coefficients of (a n + b)^3 from the binomial theorem.
inline Poly naive_linear_cube(const Rat& a, const Rat& b) {
  return Poly({b * b * b, 3 * a * b * b, 3 * a * a * b, a * a * a});
}

inline BitWord naive_stream(const std::vector<long>& blocks) {
  BitWord w;
  for (long v : blocks) {
    w += '1';
    w.append(static_cast<std::size_t>(v), '0');
  }
  return w;
}

inline BitWord naive_run(const Fst& t, const BitWord& w) {
  BitWord out;
  StateId q = t.initial();
  for (char ch : w) {
    const Transition& tr = t.at(q, ch == '1' ? 1 : 0);
    out += tr.out;
    q = tr.to;
  }
  return out;
}

/// b + sum a_i f(k n + i) evaluated pointwise.
inline Rat naive_weight_value(const Weight& w, const Poly& f, long n) {
  Rat v = w.constant();
  const long k = static_cast<long>(w.samples());
  for (long i = 0; i < k; ++i) v += w.entries()[static_cast<std::size_t>(i)] * naive_eval(f, Rat(k * n + i));
  return v;
}

using Mat3 = std::array<std::array<Rat, 3>, 3>;

inline Rat det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Cramer's rule; empty on a singular matrix.
inline std::vector<Rat> cramer3(const Mat3& m, const std::array<Rat, 3>& rhs) {
  const Rat d = det3(m);
  if (d == 0) return {};
  std::vector<Rat> x;
  for (int c = 0; c < 3; ++c) {
    Mat3 mc = m;
    for (int r = 0; r < 3; ++r) mc[r][c] = rhs[r];
    x.push_back(det3(mc) / d);
  }
  return x;
}

inline long brute_order(long b, long a) {
  if (a == 1) return 1;
  long x = b % a;
  for (long i = 1; i <= a; ++i) {
    if (x == 1) return i;
    x = x * b % a;
  }
  return -1;
}

inline long brute_gcd(long a, long b) {
  long g = 1;
  for (long d = 1; d <= std::max(a, b); ++d)
    if (a % d == 0 && b % d == 0) g = d;
  return g;
}

/// Hasse edges (a, b) of divisibility on 1..n: a | b, a < b, nothing strictly between.
inline std::vector<std::pair<long, long>> hasse_edges(long n) {
  std::vector<std::pair<long, long>> out;
  for (long a = 1; a <= n; ++a)
    for (long b = a + 1; b <= n; ++b) {
      if (b % a) continue;
      bool covered = true;
      for (long c = a + 1; c < b; ++c)
        if (c % a == 0 && b % c == 0) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace tdeg::test
