#include "tdeg/fst_build.hpp"

#include <string>

#include "tdeg/error.hpp"

namespace tdeg {

namespace {

using Table = std::vector<std::array<Transition, 2>>;

void check_size(std::uint64_t states) {
  if (states > kMaxMachineStates)
    throw Error(ErrorKind::TooLarge, "machine would need " + std::to_string(states) + " states");
}

BitWord zeros(std::uint64_t n) { return BitWord(n, '0'); }

BitWord word_for(const Rat& r, const char* what) {
  if (!is_integer(r)) throw Error(ErrorKind::NonIntegerEntries, std::string(what) + " " + to_string(r) + " is not an integer");
  if (r < 0) throw Error(ErrorKind::NegativeEntries, std::string(what) + " " + to_string(r) + " is negative");
  const std::uint64_t n = to_u64(r.get_num());
  if (n > kMaxWordBits) throw Error(ErrorKind::TooLarge, std::string(what) + " too large for an output word");
  return zeros(n);
}

}  // namespace

Fst fst_identity() { return Fst({{Transition{0, "0"}, Transition{0, "1"}}}, 0); }

Fst fst_elementary(Elementary kind, std::uint64_t a) {
  switch (kind) {
    case Elementary::scale_up:
      if (a == 0) throw Error(ErrorKind::InvalidParam, "scale_up needs a >= 1");
      check_size(1);
      return Fst({{Transition{0, zeros(a)}, Transition{0, "1"}}}, 0);

    case Elementary::scale_down: {
      if (a == 0) throw Error(ErrorKind::InvalidParam, "scale_down needs a >= 1");
      check_size(a);
      // state c: c zeros of the current group seen
      Table t(a);
      for (std::uint64_t c = 0; c < a; ++c) {
        const bool closes = c + 1 == a;
        t[c][0] = Transition{closes ? StateId{0} : static_cast<StateId>(c + 1), closes ? "0" : ""};
        t[c][1] = Transition{0, "1"};
      }
      return Fst(std::move(t), 0);
    }

    case Elementary::drop_blocks: {
      check_size(a + 2);
      // states 0..a: number of 1s seen so far; a + 1: copying
      const auto copy = static_cast<StateId>(a + 1);
      Table t(a + 2);
      for (std::uint64_t c = 0; c <= a; ++c) {
        t[c][0] = Transition{static_cast<StateId>(c), ""};
        t[c][1] = c < a ? Transition{static_cast<StateId>(c + 1), ""} : Transition{copy, "1"};
      }
      t[copy] = {Transition{copy, "0"}, Transition{copy, "1"}};
      return Fst(std::move(t), 0);
    }

    case Elementary::add_const:
      check_size(1);
      return Fst({{Transition{0, "0"}, Transition{0, "1" + zeros(a)}}}, 0);

    case Elementary::remove_const: {
      check_size(a + 1);
      // state r: r more zeros to swallow in this block
      Table t(a + 1);
      const auto full = static_cast<StateId>(a);
      t[0] = {Transition{0, "0"}, Transition{full, "1"}};
      for (std::uint64_t r = 1; r <= a; ++r) t[r] = {Transition{static_cast<StateId>(r - 1), ""}, Transition{full, "1"}};
      return Fst(std::move(t), 0);
    }
  }
  throw Error(ErrorKind::InvalidParam, "unknown elementary kind");
}

Fst fst_prepend(const BitWord& u) {
  if (!is_bitword(u)) throw Error(ErrorKind::InvalidParam, "prepend word is not a bit word");
  return Fst({{Transition{1, u + "0"}, Transition{1, u + "1"}}, {Transition{1, "0"}, Transition{1, "1"}}}, 0);
}

Fst fst_from_weight(const Weight& alpha, std::uint64_t skip) {
  const std::uint64_t k = alpha.samples();
  const std::uint64_t dropping = skip == 0 ? 0 : skip + 1;
  check_size(dropping + k);
  std::vector<BitWord> phase_out;
  for (const Rat& e : alpha.entries()) phase_out.push_back(word_for(e, "weight entry"));
  const BitWord opening = "1" + word_for(alpha.constant(), "weight constant");

  // states [0, dropping): seen c ones while swallowing; then phases 0..k-1
  Table t(dropping + k);
  const auto phase = [&](std::uint64_t i) { return static_cast<StateId>(dropping + i); };
  for (std::uint64_t c = 0; c < dropping; ++c) {
    t[c][0] = Transition{static_cast<StateId>(c), ""};
    t[c][1] = c < skip ? Transition{static_cast<StateId>(c + 1), ""} : Transition{phase(0), opening};
  }
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t next = (i + 1) % k;
    t[phase(i)][0] = Transition{phase(i), phase_out[i]};
    t[phase(i)][1] = Transition{phase(next), next == 0 ? opening : BitWord()};
  }
  // Without skipping, the machine waits in the last phase so the first 1 opens phase 0.
  return Fst(std::move(t), skip == 0 ? phase(k - 1) : StateId{0});
}

}  // namespace tdeg
