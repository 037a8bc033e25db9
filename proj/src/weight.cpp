#include "tdeg/weight.hpp"

#include <algorithm>
#include <numeric>

#include "tdeg/error.hpp"

namespace tdeg {

Weight::Weight(std::vector<Rat> entries, Rat constant) : entries_(std::move(entries)), constant_(std::move(constant)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidParam, "a weight needs at least one entry");
  for (auto& e : entries_) {
    e.canonicalize();
    if (e < 0) throw Error(ErrorKind::NegativeEntries, "weight entry " + to_string(e) + " is negative");
  }
  constant_.canonicalize();
  if (constant_ < 0) throw Error(ErrorKind::NegativeEntries, "weight constant " + to_string(constant_) + " is negative");
}

Weight Weight::identity() { return Weight({Rat(1)}, Rat(0)); }

bool Weight::is_integral() const {
  return is_integer(constant_) && std::all_of(entries_.begin(), entries_.end(), [](const Rat& e) { return is_integer(e); });
}

WeightTuple::WeightTuple(std::vector<Weight> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::InvalidParam, "a weight tuple needs at least one weight");
}

std::size_t WeightTuple::span() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::size_t{0},
                         [](std::size_t acc, const Weight& w) { return acc + w.length() - 1; });
}

WeightTuple WeightTuple::rotated(std::size_t by) const {
  std::vector<Weight> ws = weights_;
  std::rotate(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(by % ws.size()), ws.end());
  return WeightTuple(std::move(ws));
}

Rat weight_dot(const Weight& alpha, const Poly& f) {
  Rat acc = alpha.constant();
  for (std::size_t i = 0; i < alpha.samples(); ++i) acc += alpha.entries()[i] * f(Integer(static_cast<unsigned long>(i)));
  return acc;
}

std::vector<Rat> tuple_product_values(const WeightTuple& tuple, const Poly& f, std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  WeightTuple current = tuple;
  Poly g = f;
  for (std::size_t n = 0; n < count; ++n) {
    const Weight& head = current.weights().front();
    out.push_back(weight_dot(head, g));
    g = shift(g, Integer(static_cast<unsigned long>(head.length() - 1)));
    current = current.rotated();
  }
  return out;
}

Poly single_product_poly(const Weight& alpha, const Poly& f) {
  const Rat k(static_cast<unsigned long>(alpha.samples()));
  Poly out = Poly::constant(alpha.constant());
  for (std::size_t i = 0; i < alpha.samples(); ++i) {
    if (alpha.entries()[i] == 0) continue;
    out += alpha.entries()[i] * affine(f, k, Rat(static_cast<unsigned long>(i)));
  }
  return out;
}

std::vector<Poly> tuple_residue_polys(const WeightTuple& tuple, const Poly& f) {
  const Rat span(static_cast<unsigned long>(tuple.span()));
  std::vector<Poly> out;
  unsigned long offset = 0;
  for (const Weight& w : tuple.weights()) {
    // (tuple (x) f)(m q + r) = b_r + sum_i a_{r,i} f(L q + offset_r + i)
    Poly res = Poly::constant(w.constant());
    for (std::size_t i = 0; i < w.samples(); ++i) {
      if (w.entries()[i] == 0) continue;
      res += w.entries()[i] * affine(f, span, Rat(offset + i));
    }
    out.push_back(std::move(res));
    offset += w.samples();
  }
  return out;
}

std::variant<Poly, NotPolynomial> tuple_product_poly(const WeightTuple& tuple, const Poly& f) {
  auto residues = tuple_residue_polys(tuple, f);
  const Rat m(static_cast<unsigned long>(tuple.size()));
  Poly g = affine(residues.front(), 1 / m, Rat(0));
  for (std::size_t r = 0; r < residues.size(); ++r) {
    if (affine(g, m, Rat(static_cast<unsigned long>(r))) != residues[r]) return NotPolynomial{std::move(residues)};
  }
  return g;
}

Naturalized naturalize(const WeightTuple& tuple) {
  Integer scale = 1;
  for (const Weight& w : tuple.weights()) {
    for (const Rat& e : w.entries()) scale = lcm(scale, Integer(e.get_den()));
    scale = lcm(scale, Integer(w.constant().get_den()));
  }
  std::vector<Weight> scaled;
  for (const Weight& w : tuple.weights()) {
    std::vector<Rat> es;
    for (const Rat& e : w.entries()) es.push_back(e * scale);
    scaled.emplace_back(std::move(es), w.constant() * scale);
  }
  return {WeightTuple(std::move(scaled)), scale};
}

Collapsed collapse_to_single(const WeightTuple& tuple, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidExponent, "exponent must be >= 1, got " + std::to_string(k));
  const auto& ws = tuple.weights();
  auto shortest = std::min_element(ws.begin(), ws.end(),
                                   [](const Weight& a, const Weight& b) { return a.samples() < b.samples(); });
  const auto rotation = static_cast<std::size_t>(shortest - ws.begin());
  WeightTuple rotated = tuple.rotated(rotation);
  const Weight& head = rotated.weights().front();
  const std::size_t m = rotated.size();
  const std::size_t span = rotated.span();

  Integer mk = 1;
  for (int i = 0; i < k; ++i) mk *= static_cast<unsigned long>(m);
  std::vector<Rat> entries(span, Rat(0));
  for (std::size_t i = 0; i < head.samples(); ++i) entries[i * m] = head.entries()[i] / Rat(mk);
  return {Weight(std::move(entries), head.constant()), rotation, std::move(rotated)};
}

Weight compose_single(const Weight& beta, const Weight& alpha) {
  const std::size_t k = alpha.samples();
  const std::size_t l = beta.samples();
  std::vector<Rat> entries(k * l, Rat(0));
  Rat mass = 0;
  for (std::size_t j = 0; j < l; ++j) {
    mass += beta.entries()[j];
    for (std::size_t i = 0; i < k; ++i) entries[k * j + i] = beta.entries()[j] * alpha.entries()[i];
  }
  return Weight(std::move(entries), beta.constant() + alpha.constant() * mass);
}

std::size_t m_degree(const Weight& alpha) {
  return static_cast<std::size_t>(
      std::count_if(alpha.entries().begin(), alpha.entries().end(), [](const Rat& e) { return e > 0; }));
}

}  // namespace tdeg
