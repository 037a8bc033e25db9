#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "tdeg/poly.hpp"
#include "tdeg/rational.hpp"

namespace tdeg {

/// A weight <a_0, ..., a_{k-1}, b>: k >= 1 nonnegative sample coefficients
/// and a nonnegative constant.
///
/// Length bookkeeping: length() is k + 1 (entries plus constant), so the
/// weight-product recursion shifts its argument by length() - 1 == k
/// samples per output value. Use samples() when you mean k.
class Weight {
 public:
  /// Throws Error(InvalidParam) if entries is empty and
  /// Error(NegativeEntries) if any entry or the constant is negative.
  Weight(std::vector<Rat> entries, Rat constant);

  /// <1, 0>: maps every f to itself.
  static Weight identity();

  const std::vector<Rat>& entries() const { return entries_; }
  const Rat& constant() const { return constant_; }
  std::size_t samples() const { return entries_.size(); }
  std::size_t length() const { return entries_.size() + 1; }

  bool is_integral() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rat> entries_;
  Rat constant_;
};

/// Cyclic tuple of weights <alpha_0, ..., alpha_{m-1}>.
class WeightTuple {
 public:
  /// Throws Error(InvalidParam) on an empty list.
  explicit WeightTuple(std::vector<Weight> weights);

  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  /// L = sum of (|alpha_i| - 1): samples consumed by one full cycle.
  std::size_t span() const;
  /// The cyclic shift <alpha_1, ..., alpha_{m-1}, alpha_0>.
  WeightTuple rotated(std::size_t by = 1) const;

  friend bool operator==(const WeightTuple&, const WeightTuple&) = default;

 private:
  std::vector<Weight> weights_;
};

/// a_0 f(0) + ... + a_{k-1} f(k-1) + b
Rat weight_dot(const Weight& alpha, const Poly& f);

/// (tuple (x) f)(0 .. count-1) by the literal recursion: value n uses
/// weight n mod m applied to f shifted by all samples consumed so far.
std::vector<Rat> tuple_product_values(const WeightTuple& tuple, const Poly& f, std::size_t count);

/// b + sum_i a_i f(k n + i).
Poly single_product_poly(const Weight& alpha, const Poly& f);

struct NotPolynomial {
  /// residues[r](q) = (tuple (x) f)(m q + r)
  std::vector<Poly> residues;
};

/// Polynomial g with g(n) = (tuple (x) f)(n) for every n, or NotPolynomial
/// when the m residue-class polynomials do not glue into a single one.
std::variant<Poly, NotPolynomial> tuple_product_poly(const WeightTuple& tuple, const Poly& f);

/// Residue polynomials of the tuple product, see NotPolynomial.
std::vector<Poly> tuple_residue_polys(const WeightTuple& tuple, const Poly& f);

struct Naturalized {
  WeightTuple tuple;
  Integer scale;
};

/// Multiply every entry and constant by the least positive integer that
/// clears all denominators.
Naturalized naturalize(const WeightTuple& tuple);

struct Collapsed {
  Weight beta;
  /// The tuple was rotated left by this many positions so its first weight
  /// has the fewest samples; the contract is stated for rotated_tuple.
  std::size_t rotation;
  WeightTuple rotated_tuple;
};

/// Single weight beta with (beta (x) n^k)(n) == (rotated (x) n^k)(n) for
/// every n == 0 mod m. beta has span() samples; entry a_i of the leading
/// weight lands at sample i*m scaled by 1/m^k, and the constant carries over.
/// Throws Error(InvalidExponent) for k < 1.
Collapsed collapse_to_single(const WeightTuple& tuple, int k);

/// gamma with single_product_poly(gamma, f) ==
/// single_product_poly(beta, single_product_poly(alpha, f)) for all f.
Weight compose_single(const Weight& beta, const Weight& alpha);

/// Number of strictly positive entries (the constant is not counted).
std::size_t m_degree(const Weight& alpha);

}  // namespace tdeg
