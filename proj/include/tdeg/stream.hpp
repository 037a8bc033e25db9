#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdeg/fst.hpp"
#include "tdeg/poly.hpp"
#include "tdeg/runner.hpp"

namespace tdeg {

/// The stream prod_{i >= start} 1 0^{poly(i) + offset}.
struct StreamSpec {
  Poly poly;
  Integer offset = 0;
  Integer start = 0;

  /// Length of block i (counted from 0 at `start`). Throws
  /// Error(NegativeBlock) for a negative or non-integer value.
  std::uint64_t block(const Integer& i) const;

  friend bool operator==(const StreamSpec&, const StreamSpec&) = default;
};

/// Least c >= 0 with p(n) + c >= 0 for every natural n. Throws
/// Error(NegativeLeadingCoefficient) if p is eventually negative.
Integer nonneg_offset(const Poly& p);

/// Stream of p with the automatic offset.
StreamSpec auto_stream(const Poly& p);

/// First `blocks` blocks, as ASCII bits.
BitWord stream_prefix(const StreamSpec& s, std::uint64_t blocks);

/// Pushes blocks of `s` into `sink` until the sink stops or max_blocks have
/// been sent. Returns the number of blocks fully or partially consumed.
std::uint64_t feed_stream(const StreamSpec& s, RunSink& sink, std::uint64_t max_blocks);

/// Compares incoming bits against a prefix of a target stream.
class CompareSink final : public RunSink {
 public:
  CompareSink(const StreamSpec& target, std::uint64_t blocks);

  bool put(char bit, std::uint64_t count) override;

  bool done() const { return mismatch_.has_value() || compared_ == total_; }
  std::optional<std::uint64_t> mismatch() const { return mismatch_; }
  std::uint64_t compared() const { return compared_; }
  std::uint64_t total() const { return total_; }

 private:
  bool load_next();

  const StreamSpec* target_;
  std::uint64_t blocks_;
  std::uint64_t next_block_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t compared_ = 0;
  // current segment of the target: `seg_count` copies of `seg_bit`
  char seg_bit_ = '1';
  std::uint64_t seg_count_ = 0;
  std::uint64_t pending_zeros_ = 0;
  std::optional<std::uint64_t> mismatch_;
};

struct VerifyResult {
  bool ok = false;
  /// First differing bit position (0-based) when !ok.
  std::optional<std::uint64_t> mismatch;
  std::uint64_t compared_bits = 0;
  std::uint64_t target_bits = 0;
  std::uint64_t source_blocks = 0;
  /// Set when the source cap was hit before the target prefix was covered.
  bool output_exhausted = false;
};

constexpr std::uint64_t kDefaultMaxSourceBlocks = std::uint64_t{1} << 20;

/// Runs `t` on the source stream and compares its output bit-for-bit with the
/// first `blocks` blocks of the target. Source blocks are generated lazily
/// until the output covers the target prefix. If the source cap is reached
/// first, the result is a mismatch at the end of the produced output.
VerifyResult verify_transduction(const Fst& t, const StreamSpec& source, const StreamSpec& target, std::uint64_t blocks,
                                 std::uint64_t max_source_blocks = kDefaultMaxSourceBlocks);

/// Same, for a cascade of machines applied left to right.
VerifyResult verify_chain(const std::vector<const Fst*>& machines, const StreamSpec& source, const StreamSpec& target,
                          std::uint64_t blocks, std::uint64_t max_source_blocks = kDefaultMaxSourceBlocks);

}  // namespace tdeg
