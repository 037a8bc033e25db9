#include "tdeg/poly.hpp"

#include <sstream>

namespace tdeg {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, int power) {
  std::vector<Rat> cs(static_cast<std::size_t>(power) + 1, Rat(0));
  cs.back() = c;
  return Poly(std::move(cs));
}

Poly Poly::linear_power(const Rat& a, const Rat& b, int power) {
  Poly base({b, a});
  Poly out = constant(1);
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat Poly::operator()(const Integer& n) const { return (*this)(Rat(n)); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly shift(const Poly& p, const Integer& k) {
  const auto& cs = p.coeffs();
  std::vector<Rat> out(cs.size(), Rat(0));
  // (n+k)^i = sum_j C(i,j) k^(i-j) n^j
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    Integer kpow = 1;
    for (std::size_t j = i + 1; j-- > 0;) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), i, j);
      out[j] += cs[i] * Rat(binom * kpow);
      kpow *= k;
    }
  }
  return Poly(std::move(out));
}

Poly affine(const Poly& p, const Rat& a, const Rat& b) {
  Poly lin({b, a});
  Poly acc;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lin + Poly::constant(*it);
  return acc;
}

std::vector<Rat> binomial_basis(const Poly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<Rat> diffs;
  for (int n = 0; n <= d; ++n) diffs.push_back(p(Integer(n)));
  std::vector<Rat> out;
  for (int order = 0; order <= d; ++order) {
    out.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return out;
}

bool is_integer_valued(const Poly& p) {
  for (const auto& c : binomial_basis(p))
    if (!is_integer(c)) return false;
  return true;
}

Integer integer_valued_scale(const Poly& p) {
  Integer scale = 1;
  for (const auto& c : binomial_basis(p)) scale = lcm(scale, Integer(c.get_den()));
  return scale;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << to_string(mag);
    if (i >= 1) os << "n";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace tdeg
