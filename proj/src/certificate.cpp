#include "tdeg/certificate.hpp"

#include <algorithm>

#include "tdeg/error.hpp"
#include "tdeg/fst_build.hpp"

namespace tdeg {

namespace {

Rat ceil_nonneg(const Rat& x) { return x <= 0 ? Rat(0) : Rat(ceil(x)); }

std::uint64_t as_u64(const Rat& r, const char* what) {
  if (!is_integer(r)) throw Error(ErrorKind::ChainNotRealizable, std::string(what) + " " + to_string(r) + " is not integral");
  return to_u64(r.get_num());
}

// Splits L into factors of at most kScaleChunk so that a large scale becomes a
// cascade of small counters; dividing by a then b is dividing by ab.
constexpr std::uint64_t kScaleChunk = std::uint64_t{1} << 16;

std::vector<std::uint64_t> scale_factors(Integer rest) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; rest > 1 && p <= kMaxMachineStates; ++p) {
    if (p * p > kMaxMachineStates && rest <= Integer(static_cast<unsigned long>(kMaxMachineStates))) {
      primes.push_back(to_u64(rest));
      rest = 1;
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.push_back(p);
      rest /= static_cast<unsigned long>(p);
    }
  }
  if (rest > 1) throw Error(ErrorKind::TooLarge, "scale has a prime factor above " + std::to_string(kMaxMachineStates));
  std::vector<std::uint64_t> chunks;
  std::uint64_t cur = 1;
  for (std::uint64_t p : primes) {
    if (cur > 1 && cur * p > kScaleChunk) {
      chunks.push_back(cur);
      cur = 1;
    }
    cur *= p;
  }
  if (cur > 1) chunks.push_back(cur);
  return chunks;
}

}  // namespace

bool claim_holds(const TransductionClaim& c) {
  const Poly lhs = shift(c.target, Integer(static_cast<unsigned long>(c.target_shift)));
  const Poly rhs =
      single_product_poly(c.weight, shift(c.source, Integer(static_cast<unsigned long>(c.skip)))) + Poly::constant(c.constant_delta);
  return lhs == rhs;
}

std::uint64_t TransductionCertificate::source_blocks_for(std::uint64_t blocks) const {
  return machine_weight.samples() * (blocks + 1) + claim.skip + 1;
}

TransductionCertificate build_certificate(const TransductionClaim& claim, const CertifyOptions& opts) {
  if (!claim_holds(claim))
    throw Error(ErrorKind::ClaimFalse, "target(n + " + std::to_string(claim.target_shift) + ") != weight (x) S^" +
                                           std::to_string(claim.skip) + " source + delta");
  TransductionCertificate cert;
  cert.claim = claim;

  // Integer-valued sides: target'(n + n0) = w' (x) S^skip source' + delta'
  cert.source_scale = integer_valued_scale(claim.source);
  cert.target_scale = integer_valued_scale(claim.target);
  const Poly source = claim.source * Rat(cert.source_scale);
  const Poly target = claim.target * Rat(cert.target_scale);
  const Rat ratio = Rat(cert.target_scale) / Rat(cert.source_scale);
  std::vector<Rat> w;
  for (const Rat& e : claim.weight.entries()) w.push_back(e * ratio);
  const Rat b = claim.weight.constant() * Rat(cert.target_scale);
  const Rat delta = claim.constant_delta * Rat(cert.target_scale);

  cert.source = auto_stream(source);
  cert.target = auto_stream(target);
  const Rat off_s(cert.source.offset);
  const Rat off_t(cert.target.offset);

  // Clear denominators of the weight, its constant and the delta.
  Integer scale = 1;
  for (const Rat& e : w) scale = lcm(scale, Integer(e.get_den()));
  scale = lcm(scale, Integer(b.get_den()));
  scale = lcm(scale, Integer(delta.get_den()));
  cert.scale = scale;
  const Rat L(scale);

  Rat mass = 0;
  std::vector<Rat> integral;
  for (const Rat& e : w) {
    integral.push_back(e * L);
    mass += e * L;
  }
  // Output block = sum W_i v_s + C must equal L (v_t + removed).
  const Rat base = L * (b + delta + off_t) - off_s * mass;
  const Rat removed = ceil_nonneg(-base / L);
  cert.removed = removed.get_num();
  const Rat machine_constant = base + L * removed;
  cert.machine_weight = Weight(integral, machine_constant);

  cert.stages.push_back(fst_from_weight(cert.machine_weight, claim.skip));
  for (std::uint64_t f : scale_factors(scale)) cert.stages.push_back(fst_elementary(Elementary::scale_down, f));
  if (cert.removed > 0) cert.stages.push_back(fst_elementary(Elementary::remove_const, as_u64(removed, "removed constant")));
  if (claim.target_shift > 0) {
    std::uint64_t bits = 0;
    for (std::uint64_t i = 0; i < claim.target_shift; ++i) {
      bits += cert.target.block(Integer(static_cast<unsigned long>(i))) + 1;
      if (bits > opts.max_prefix_bits) throw Error(ErrorKind::TooLarge, "prepended target prefix is too long");
    }
    cert.prefix = stream_prefix(cert.target, claim.target_shift);
    cert.stages.push_back(fst_prepend(cert.prefix));
  }

  // Reachable pairs can approach the product of the stage sizes, and each
  // one replays a whole output word; skip composing when that is big.
  std::uint64_t bound = 1;
  for (const Fst& f : cert.stages) bound = bound > opts.max_composed_states ? bound : bound * f.size();
  std::uint64_t longest = 1;
  for (const auto& row : cert.stages.front().table())
    for (const Transition& t : row) longest = std::max<std::uint64_t>(longest, t.out.size());
  if (bound > opts.max_composed_states || bound * longest > opts.max_compose_work) return cert;
  try {
    Fst acc = cert.stages.front();
    for (std::size_t i = 1; i < cert.stages.size(); ++i) acc = fst_compose(acc, cert.stages[i], opts.max_composed_states);
    cert.composed = std::move(acc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
  }
  return cert;
}

VerifyResult replay(const TransductionCertificate& cert, std::uint64_t blocks) {
  const std::uint64_t cap = cert.source_blocks_for(blocks);
  if (cert.composed) return verify_transduction(*cert.composed, cert.source, cert.target, blocks, cap);
  std::vector<const Fst*> machines;
  for (const Fst& f : cert.stages) machines.push_back(&f);
  return verify_chain(machines, cert.source, cert.target, blocks, cap);
}

CertifiedStream certify_stream(const TransductionClaim& claim, std::uint64_t blocks, const CertifyOptions& opts) {
  auto cert = build_certificate(claim, opts);
  auto result = replay(cert, blocks);
  return {std::move(cert), result};
}

}  // namespace tdeg
