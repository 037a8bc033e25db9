#include "tdeg/degree.hpp"

#include "tdeg/error.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

CanonicalDegree CanonicalDegree::one_t(std::uint64_t a) {
  if (a == 0) throw Error(ErrorKind::InvalidParam, "OneT modulus must be >= 1");
  return CanonicalDegree(Kind::OneT, a);
}

Poly CanonicalDegree::representative() const {
  switch (kind_) {
    case Kind::Zero: return Poly::constant(1);
    case Kind::Bottom3: return single_product_poly(Weight({1, 1, 1}, 0), Poly::monomial(1, 3));
    case Kind::OneT: return Poly::linear_power(Rat(Integer(std::to_string(a_))), Rat(1), 3);
  }
  return {};
}

std::string to_string(const CanonicalDegree& d) {
  switch (d.kind()) {
    case CanonicalDegree::Kind::Zero: return "Zero";
    case CanonicalDegree::Kind::Bottom3: return "Bottom3";
    case CanonicalDegree::Kind::OneT: return "OneT(" + std::to_string(d.modulus()) + ")";
  }
  return "?";
}

namespace {

std::uint64_t parse_modulus(std::string_view s, std::string_view whole) {
  try {
    const Integer a = parse_integer(s);
    if (a < 1) throw Error(ErrorKind::Parse, "");
    return to_u64(a);
  } catch (const Error&) {
    throw Error(ErrorKind::Parse, "bad degree '" + std::string(whole) + "'");
  }
}

}  // namespace

CanonicalDegree parse_degree(std::string_view text) {
  if (text == "zero" || text == "Zero" || text == "0") return CanonicalDegree::zero();
  if (text == "bottom" || text == "Bottom3") return CanonicalDegree::bottom();
  if (text.starts_with("one:")) return CanonicalDegree::one_t(parse_modulus(text.substr(4), text));
  if (text.starts_with("OneT(") && text.ends_with(")"))
    return CanonicalDegree::one_t(parse_modulus(text.substr(5, text.size() - 6), text));
  return CanonicalDegree::one_t(parse_modulus(text, text));
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::equivalent: return "equivalent";
    case Order::above: return "above";
    case Order::below: return "below";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

Order compare(const CanonicalDegree& x, const CanonicalDegree& y) {
  using K = CanonicalDegree::Kind;
  auto rank = [](K k) { return k == K::Zero ? 0 : k == K::Bottom3 ? 1 : 2; };
  if (x.kind() != y.kind()) return rank(x.kind()) > rank(y.kind()) ? Order::above : Order::below;
  if (x.kind() != K::OneT) return Order::equivalent;
  const std::uint64_t a = x.modulus();
  const std::uint64_t b = y.modulus();
  if (a == b) return Order::equivalent;
  if (b % a == 0) return Order::above;
  if (a % b == 0) return Order::below;
  return Order::incomparable;
}

}  // namespace tdeg
