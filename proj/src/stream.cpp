#include "tdeg/stream.hpp"

#include <algorithm>

#include "tdeg/error.hpp"

namespace tdeg {

namespace {

// Bound beyond which p is strictly increasing on the naturals: every real
// root of p' has magnitude below 1 + max |c_i / c_lead| (Cauchy).
Integer increasing_from(const Poly& p) {
  if (p.degree() < 2) return 0;
  std::vector<Rat> dcs;
  for (int i = 1; i <= p.degree(); ++i) dcs.push_back(p.coeff(i) * i);
  const Rat lead = dcs.back();
  Rat bound = 0;
  for (std::size_t i = 0; i + 1 < dcs.size(); ++i) bound = std::max(bound, Rat(abs(dcs[i] / lead)));
  return ceil(bound) + 1;
}

}  // namespace

std::uint64_t StreamSpec::block(const Integer& i) const {
  Rat v = poly(Integer(start + i)) + Rat(offset);
  if (!is_integer(v))
    throw Error(ErrorKind::NegativeBlock, "block " + i.get_str() + " has non-integer length " + to_string(v));
  if (v < 0) throw Error(ErrorKind::NegativeBlock, "block " + i.get_str() + " has negative length " + to_string(v));
  return to_u64(v.get_num());
}

Integer nonneg_offset(const Poly& p) {
  if (p.leading() < 0)
    throw Error(ErrorKind::NegativeLeadingCoefficient, "leading coefficient of " + to_string(p) + " is negative");
  const Integer bound = increasing_from(p);
  Rat lowest = 0;
  for (Integer n = 0; n <= bound; ++n) lowest = std::min(lowest, p(n));
  return ceil(-lowest);
}

StreamSpec auto_stream(const Poly& p) { return StreamSpec{p, nonneg_offset(p), 0}; }

std::uint64_t feed_stream(const StreamSpec& s, RunSink& sink, std::uint64_t max_blocks) {
  for (std::uint64_t i = 0; i < max_blocks; ++i) {
    const std::uint64_t zeros = s.block(Integer(static_cast<unsigned long>(i)));
    if (!sink.put('1', 1)) return i + 1;
    if (zeros > 0 && !sink.put('0', zeros)) return i + 1;
  }
  return max_blocks;
}

BitWord stream_prefix(const StreamSpec& s, std::uint64_t blocks) {
  StringSink sink;
  feed_stream(s, sink, blocks);
  return std::move(sink.word);
}

CompareSink::CompareSink(const StreamSpec& target, std::uint64_t blocks) : target_(&target), blocks_(blocks) {
  for (std::uint64_t i = 0; i < blocks; ++i) {
    const std::uint64_t b = target.block(Integer(static_cast<unsigned long>(i)));
    if (__builtin_add_overflow(total_, b + 1, &total_)) throw Error(ErrorKind::TooLarge, "target prefix exceeds 64 bits");
  }
}

bool CompareSink::load_next() {
  if (pending_zeros_ > 0) {
    seg_bit_ = '0';
    seg_count_ = pending_zeros_;
    pending_zeros_ = 0;
    return true;
  }
  if (next_block_ == blocks_) return false;
  pending_zeros_ = target_->block(Integer(static_cast<unsigned long>(next_block_)));
  ++next_block_;
  seg_bit_ = '1';
  seg_count_ = 1;
  return true;
}

bool CompareSink::put(char bit, std::uint64_t count) {
  while (count > 0) {
    if (done()) return false;
    if (seg_count_ == 0 && !load_next()) return false;
    if (bit != seg_bit_) {
      mismatch_ = compared_;
      return false;
    }
    const std::uint64_t take = std::min(count, seg_count_);
    seg_count_ -= take;
    count -= take;
    compared_ += take;
  }
  return !done();
}

VerifyResult verify_chain(const std::vector<const Fst*>& machines, const StreamSpec& source, const StreamSpec& target,
                          std::uint64_t blocks, std::uint64_t max_source_blocks) {
  if (blocks == 0) throw Error(ErrorKind::InvalidParam, "blocks must be >= 1");
  CompareSink cmp(target, blocks);
  Pipeline pipe(machines, cmp);
  VerifyResult res;
  res.source_blocks = feed_stream(source, pipe, max_source_blocks);
  res.compared_bits = cmp.compared();
  res.target_bits = cmp.total();
  if (cmp.mismatch()) {
    res.mismatch = cmp.mismatch();
  } else if (cmp.compared() < cmp.total()) {
    res.output_exhausted = true;
    res.mismatch = cmp.compared();
  } else {
    res.ok = true;
  }
  return res;
}

VerifyResult verify_transduction(const Fst& t, const StreamSpec& source, const StreamSpec& target, std::uint64_t blocks,
                                 std::uint64_t max_source_blocks) {
  return verify_chain({&t}, source, target, blocks, max_source_blocks);
}

}  // namespace tdeg
