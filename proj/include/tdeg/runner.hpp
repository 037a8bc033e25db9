#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tdeg/fst.hpp"

namespace tdeg {

/// Consumer of run-length encoded bits. put() returns false once the sink
/// wants no more input.
class RunSink {
 public:
  virtual ~RunSink() = default;
  virtual bool put(char bit, std::uint64_t count) = 0;
};

class StringSink final : public RunSink {
 public:
  bool put(char bit, std::uint64_t count) override {
    word.append(count, bit);
    return true;
  }
  BitWord word;
};

class CountingSink final : public RunSink {
 public:
  bool put(char, std::uint64_t count) override {
    bits += count;
    return true;
  }
  std::uint64_t bits = 0;
};

namespace detail {

/// Decomposition of the functional graph q -> delta(q, b) for each bit, so
/// long runs of one input bit can be fast-forwarded around cycles.
struct RunPlan {
  struct Cycle {
    std::vector<StateId> states;
    /// prefix[i] = output bits of the first i steps around the cycle.
    std::vector<std::uint64_t> prefix;
    /// Every output on the cycle is made of this one bit (or empty);
    /// '\0' when outputs mix bits.
    char uniform = '\0';
  };
  struct Node {
    std::uint32_t cycle = 0;
    std::uint32_t pos = 0;
    std::uint32_t tail = 0;  // steps before reaching the cycle
  };
  std::array<std::vector<Node>, 2> nodes;
  std::array<std::vector<Cycle>, 2> cycles;

  static RunPlan build(const Fst& t);
};

}  // namespace detail

/// Feeds runs through an Fst and forwards its output runs downstream.
/// Runner state is the only mutable part; the Fst is shared read-only.
class FstRunner final : public RunSink {
 public:
  FstRunner(const Fst& t, RunSink& downstream) : fst_(&t), out_(&downstream), state_(t.initial()) {}

  bool put(char bit, std::uint64_t count) override;
  StateId state() const { return state_; }
  void reset(StateId q) { state_ = q; }

 private:
  bool step(int b);

  const Fst* fst_;
  RunSink* out_;
  StateId state_;
};

/// Runs a cascade of machines, each feeding the next, into `sink`.
class Pipeline final : public RunSink {
 public:
  Pipeline(const std::vector<const Fst*>& machines, RunSink& sink);
  bool put(char bit, std::uint64_t count) override;

 private:
  std::vector<std::unique_ptr<FstRunner>> runners_;
  RunSink* head_;
};

}  // namespace tdeg
