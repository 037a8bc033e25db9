#include "tdeg/canon.hpp"

#include "tdeg/fst_build.hpp"

#include "tdeg/error.hpp"
#include "tdeg/number_theory.hpp"

namespace tdeg {

namespace {

std::string lin(const Integer& a, const Integer& b) {
  std::string s = "(" + (a == 1 ? std::string() : a.get_str()) + "n";
  if (b > 0) s += "+" + b.get_str();
  if (b < 0) s += b.get_str();
  return s + ")^3";
}

Poly cube(const Integer& a, const Integer& b) { return Poly::linear_power(Rat(a), Rat(b), 3); }

Rat cube_of(const Integer& x) { return Rat(x * x * x); }

/// Weight with `samples` entries, `first` at position 0 and zeros elsewhere.
Weight sampling(const Integer& samples, const Rat& first) {
  std::vector<Rat> entries(to_u64(samples), Rat(0));
  entries[0] = first;
  return Weight(std::move(entries), 0);
}

// P0(n) = P1(n + q)
void shift_claims(const Poly& p0, const Poly& p1, const Integer& q, const std::string& label,
                  std::vector<TransductionClaim>& out) {
  const std::uint64_t mag = to_u64(abs(q));
  TransductionClaim fwd{p0, p1, Weight::identity(), 0, 0, 0, label + " (forward)"};
  TransductionClaim back{p1, p0, Weight::identity(), 0, 0, 0, label + " (backward)"};
  if (q > 0) {
    fwd.target_shift = mag;
    back.skip = mag;
  } else {
    fwd.skip = mag;
    back.target_shift = mag;
  }
  out.push_back(std::move(fwd));
  out.push_back(std::move(back));
}

}  // namespace

Canonicalized canonicalize_1transform(const Integer& a, const Integer& b) {
  if (a < 1) throw Error(ErrorKind::InvalidParam, "a must be >= 1");
  CanonCertificate c;
  c.a = a;
  c.b = b;
  c.b0 = mod_floor(b, a);
  c.shift_q = (b - c.b0) / a;
  if (c.shift_q != 0)
    c.chain.push_back(lin(a, b) + " == " + lin(a, c.b0) + " by shifting " + c.shift_q.get_str() + " blocks");

  c.g = gcd(a, c.b0);
  c.a_reduced = a / c.g;
  c.b_reduced = c.b0 / c.g;
  if (c.g > 1)
    c.chain.push_back(lin(a, c.b0) + " = " + c.g.get_str() + "^3 " + lin(c.a_reduced, c.b_reduced) +
                      " == " + lin(c.a_reduced, c.b_reduced) + " by scaling");

  if (c.b_reduced == 0) {
    // a' == 1 here
    c.chain.push_back("n^3 == (n+1)^3 by shifting 1 block");
  } else if (c.b_reduced > 1) {
    c.order_i = multiplicative_order(c.b_reduced, c.a_reduced);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), c.b_reduced.get_mpz_t(), to_u64(*c.order_i));
    c.order_m = (power - 1) / c.a_reduced;
    c.chain.push_back(c.b_reduced.get_str() + "^" + c.order_i->get_str() + " = " + c.a_reduced.get_str() + "*" +
                      c.order_m->get_str() + " + 1, so " + lin(c.a_reduced, c.b_reduced) + " == " +
                      lin(c.a_reduced, Integer(1)));
  }
  c.canonical = c.a_reduced;
  return {c.canonical, std::move(c)};
}

std::vector<TransductionClaim> CanonCertificate::claims(std::uint64_t max_samples, std::vector<std::string>* omitted) const {
  std::vector<TransductionClaim> out;
  auto skip_step = [&](const std::string& why) {
    if (omitted) omitted->push_back(why);
  };

  if (shift_q != 0) shift_claims(cube(a, b), cube(a, b0), shift_q, "shift", out);

  if (g > 1) {
    const Rat g3 = cube_of(g);
    out.push_back({cube(a, b0), cube(a_reduced, b_reduced), Weight({1 / g3}, 0), 0, 0, 0, "divide out gcd (forward)"});
    out.push_back({cube(a_reduced, b_reduced), cube(a, b0), Weight({g3}, 0), 0, 0, 0, "divide out gcd (backward)"});
  }

  if (b_reduced == 0) {
    shift_claims(cube(a_reduced, Integer(0)), cube(a_reduced, Integer(1)), Integer(-1), "unit shift", out);
  } else if (b_reduced > 1) {
    const Poly from = cube(a_reduced, b_reduced);
    const Poly to = cube(a_reduced, Integer(1));
    // (a'n+b')^3 sampled every b' blocks is b'^3 (a'n+1)^3
    const Integer states_cap(static_cast<unsigned long>(kMaxMachineStates));
    if (b_reduced <= max_samples)
      out.push_back({from, to, sampling(b_reduced, 1 / cube_of(b_reduced)), 0, 0, 0, "order step (forward)"});
    else
      skip_step("order step (forward): sampling every " + b_reduced.get_str() + " blocks needs too large a machine");
    // (a'n+1)^3 from block m, sampled every b'^(i-1) blocks, is b'^(3(i-1)) (a'n+b')^3
    Integer stride;
    mpz_pow_ui(stride.get_mpz_t(), b_reduced.get_mpz_t(), to_u64(*order_i) - 1);
    if (stride <= max_samples && *order_m <= states_cap) {
      out.push_back({to, from, sampling(stride, 1 / cube_of(stride)), to_u64(*order_m), 0, 0, "order step (backward)"});
    } else {
      skip_step("order step (backward): sampling every " + stride.get_str() + " blocks after " + order_m->get_str() + " needs too large a machine");
    }
  }
  return out;
}

}  // namespace tdeg
