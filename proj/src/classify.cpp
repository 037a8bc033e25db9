#include "tdeg/classify.hpp"

#include "tdeg/error.hpp"
#include "tdeg/number_theory.hpp"

namespace tdeg {

namespace {

std::vector<std::size_t> positive_positions(const Weight& alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alpha.samples(); ++i)
    if (alpha.entries()[i] > 0) out.push_back(i);
  return out;
}

void classify_one(Classification& c, std::size_t pos) {
  const Rat& coeff = c.weight.entries()[pos];
  const Integer k(static_cast<unsigned long>(c.weight.samples()));
  const Integer offset = Integer(static_cast<unsigned long>(pos)) + c.shift;
  const Poly bare = Poly::linear_power(Rat(k), Rat(offset), 3);

  c.chain.push_back("1-transform: " + to_string(c.product) + " = " + to_string(coeff) + " (" + k.get_str() + "n" +
                    (offset >= 0 ? "+" : "") + offset.get_str() + ")^3 + " + to_string(c.weight.constant()));
  c.claims.push_back({c.product, bare, Weight({1 / coeff}, 0), 0, 0, -c.weight.constant() / coeff,
                      "drop scalar and constant (forward)"});
  c.claims.push_back({bare, c.product, Weight({coeff}, 0), 0, 0, c.weight.constant(), "drop scalar and constant (backward)"});

  auto canon = canonicalize_1transform(k, offset);
  for (const auto& step : canon.cert.chain) c.chain.push_back(step);
  for (auto& claim : canon.cert.claims(4096, &c.omitted)) c.claims.push_back(std::move(claim));
  c.degree = CanonicalDegree::one_t(to_u64(canon.canonical));
  c.canon = std::move(canon.cert);
}

void classify_two(Classification& c, std::size_t i1, std::size_t i2) {
  const long p = static_cast<long>(c.weight.samples());
  const Rat& a = c.weight.entries()[i1];
  const Rat& b = c.weight.entries()[i2];
  const long c1 = static_cast<long>(i1) + c.shift;
  const long j = static_cast<long>(i2 - i1);
  long r = static_cast<long>(to_u64(mod_floor(Integer(c1), Integer(p))));
  if (r + j >= p) {
    // The two samples straddle a period boundary; anchor the first at 0 and
    // shift by the fraction c1 / p instead.
    r = 0;
  }
  Reduce2Certificate cert = reduce_2transform(a, b, p, r, r + j);
  const long whole = c1 - r;  // product(n) = two_transform(n + whole / p) + constant
  c.reduce2_outer_shift = Rat(whole, p);
  c.reduce2_outer_shift.canonicalize();

  const long source_shift = cert.base_shift + cert.k * whole;
  TransductionClaim claim = cert.claim();
  claim.source = Poly::linear_power(Rat(1), Rat(source_shift), 3);
  claim.target = c.product;
  claim.weight = Weight(cert.three_transform().entries(), c.weight.constant());
  claim.note = "2-transform reduced to a 3-transform of a shifted cube";
  c.chain.push_back("2-transform: d = " + to_string(cert.d) + ", j = " + std::to_string(cert.j) + ", k = " +
                    std::to_string(cert.k) + ", 3-transform of " + to_string(claim.source) + " with period " +
                    std::to_string(cert.period));
  c.claims.push_back(std::move(claim));
  c.degree = CanonicalDegree::bottom();
  c.reduce2 = std::move(cert);
}

void classify_many(Classification& c, const std::optional<Poly>& q_eps) {
  std::variant<SearchedWitness, PositivityLost> found = PositivityLost{};
  if (q_eps) {
    auto res = bottom_witness(c.weight, c.shift, *q_eps);
    if (auto* w = std::get_if<BottomWitness>(&res)) found = SearchedWitness{std::move(*w), *q_eps};
  } else {
    found = find_bottom_witness(c.weight, c.shift);
  }
  if (std::holds_alternative<PositivityLost>(found)) {
    // Still Bottom3; only the explicit witness is missing.
    c.omitted.push_back(q_eps ? "perturbation witness: the supplied q_eps does not keep the support positive"
                              : "perturbation witness: no q_eps down to 10^-30 kept the support positive");
    c.degree = CanonicalDegree::bottom();
    return;
  }
  auto& w = std::get<SearchedWitness>(found);
  TransductionClaim claim;
  claim.source = shift(w.q_eps, Integer(c.shift));
  claim.target = c.product;
  claim.weight = w.witness.weight;
  claim.constant_delta = w.witness.constant_delta;
  claim.note = "q_eps(n+t) transduced into the m-transform";
  c.claims.push_back(std::move(claim));
  c.chain.push_back(std::to_string(m_degree(c.weight)) + "-transform: witness from q_eps = " + to_string(w.q_eps));
  c.degree = CanonicalDegree::bottom();
  c.bottom = std::move(w);
}

// Keeps only claims whose machines fit the builder limits.
void drop_unbuildable(Classification& c) {
  std::vector<TransductionClaim> kept;
  for (auto& claim : c.claims) {
    try {
      build_certificate(claim);
      kept.push_back(std::move(claim));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      c.omitted.push_back(claim.note + ": " + e.what());
    }
  }
  c.claims = std::move(kept);
}

}  // namespace

Classification classify(const Weight& alpha, long t, const std::optional<Poly>& q_eps) {
  Classification c;
  c.weight = alpha;
  c.shift = t;
  const Poly base = Poly::linear_power(Rat(1), Rat(t), 3);
  c.product = single_product_poly(alpha, base);
  c.claims.push_back({base, c.product, alpha, 0, 0, 0, "weight product"});

  const auto positive = positive_positions(alpha);
  switch (positive.size()) {
    case 0:
      c.degree = CanonicalDegree::zero();
      c.chain.push_back("constant product " + to_string(alpha.constant()) + ": ultimately periodic");
      break;
    case 1: classify_one(c, positive[0]); break;
    case 2: classify_two(c, positive[0], positive[1]); break;
    default: classify_many(c, q_eps); break;
  }
  drop_unbuildable(c);
  return c;
}

std::optional<Classification> classify_tuple(const WeightTuple& tuple, std::string* why) {
  const Poly cube = Poly::monomial(1, 3);
  auto product = tuple_product_poly(tuple, cube);
  if (std::holds_alternative<NotPolynomial>(product)) {
    if (why) *why = "tuple product over n^3 is not a polynomial; its degree is not classified";
    return std::nullopt;
  }
  const Poly& g = std::get<Poly>(product);
  auto collapsed = collapse_to_single(tuple, 3);
  if (single_product_poly(collapsed.beta, cube) != g) {
    if (why) *why = "collapsed weight matches the tuple only on a residue class";
    return std::nullopt;
  }
  Classification c = classify(collapsed.beta, 0);
  c.chain.insert(c.chain.begin(), "tuple collapsed to a single weight of " + std::to_string(collapsed.beta.samples()) +
                                      " samples");
  return c;
}

std::optional<TransductionClaim> order_claim(const CanonicalDegree& x, const CanonicalDegree& y) {
  const Order o = compare(x, y);
  if (o != Order::above && o != Order::equivalent) return std::nullopt;
  const Poly src = x.representative();
  using K = CanonicalDegree::Kind;
  TransductionClaim c{src, y.representative(), Weight::identity(), 0, 0, 0, to_string(x) + " >= " + to_string(y)};
  if (o == Order::equivalent) return c;
  switch (y.kind()) {
    case K::Zero:
      c.weight = Weight({0}, 1);
      break;
    case K::Bottom3:
      // a 3-transform of (an+1)^3 is a 3-transform of n^3
      c.weight = Weight({1, 1, 1}, 0);
      c.target = single_product_poly(c.weight, src);
      break;
    case K::OneT: {
      std::vector<Rat> entries(y.modulus() / x.modulus(), Rat(0));
      entries[0] = 1;
      c.weight = Weight(std::move(entries), 0);
      break;
    }
  }
  return c;
}

}  // namespace tdeg
