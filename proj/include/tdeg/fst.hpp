#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tdeg {

/// Finite word over {0,1}, stored as ASCII '0'/'1'.
using BitWord = std::string;

bool is_bitword(std::string_view w);

using StateId = std::uint32_t;

struct Transition {
  StateId to = 0;
  BitWord out;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Maximal run of one bit.
struct Run {
  char bit;
  std::uint64_t count;
};

/// Run-length form of a word; adjacent runs always differ in bit.
std::vector<Run> to_runs(std::string_view w);

namespace detail {
struct RunPlan;
}

/// Complete, deterministic (pure sequential) transducer over {0,1}:
/// delta and lambda are total on (state, bit).
class Fst {
 public:
  /// table[q][b] is the transition taken from q on input bit b.
  /// Throws Error(InvalidParam) if the table is empty, a target state is out
  /// of range, or an output is not a bit word.
  Fst(std::vector<std::array<Transition, 2>> table, StateId initial);

  std::size_t size() const { return table_.size(); }
  StateId initial() const { return initial_; }
  const Transition& at(StateId q, int bit) const { return table_[q][static_cast<std::size_t>(bit)]; }
  const std::vector<std::array<Transition, 2>>& table() const { return table_; }

  /// Output of (q, bit) in run-length form.
  const std::vector<Run>& out_runs(StateId q, int bit) const { return runs_[q][static_cast<std::size_t>(bit)]; }
  const detail::RunPlan& plan() const { return *plan_; }

  friend bool operator==(const Fst& a, const Fst& b) { return a.initial_ == b.initial_ && a.table_ == b.table_; }

 private:
  std::vector<std::array<Transition, 2>> table_;
  StateId initial_;
  std::vector<std::array<std::vector<Run>, 2>> runs_;
  std::shared_ptr<const detail::RunPlan> plan_;
};

/// lambda(q0, w) under the left-to-right extension.
BitWord fst_run(const Fst& t, std::string_view w);

/// Product machine C with fst_run(C, w) == fst_run(second, fst_run(first, w)).
/// Only pairs reachable from the initial pair are materialized. Throws
/// Error(TooLarge) past max_states.
Fst fst_compose(const Fst& first, const Fst& second, std::size_t max_states = std::size_t{1} << 21);

}  // namespace tdeg
