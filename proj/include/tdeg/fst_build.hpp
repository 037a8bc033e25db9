#pragma once

#include <cstdint>

#include "tdeg/fst.hpp"
#include "tdeg/weight.hpp"

namespace tdeg {

/// Largest machine the builders will materialize.
constexpr std::uint64_t kMaxMachineStates = std::uint64_t{1} << 22;
/// Longest single transition output the builders will materialize.
constexpr std::uint64_t kMaxWordBits = std::uint64_t{1} << 24;

/// Realizers of the elementary stream equivalences.
enum class Elementary {
  scale_up,      // each 0 -> 0^a
  scale_down,    // one 0 per a zeros; counter reset on 1
  drop_blocks,   // swallow the first k blocks
  add_const,     // each 1 -> 1 0^a
  remove_const,  // after each 1, swallow up to a zeros
};

/// Throws Error(InvalidParam) for a == 0 on the scale kinds and
/// Error(TooLarge) past kMaxMachineStates.
Fst fst_elementary(Elementary kind, std::uint64_t param);

/// Emits u, then copies its input.
Fst fst_prepend(const BitWord& u);

Fst fst_identity();

/// Phase-cycling machine for an integral weight <a_0..a_{k-1}, b>.
/// Swallows `skip` leading blocks, then cycles through k block phases: the 1
/// opening phase 0 emits 1 0^b, the 1 opening phases 1..k-1 emits nothing,
/// and each 0 read in phase i emits 0^{a_i}. Maps <S^skip f> to
/// <alpha (x) S^skip f>.
/// Throws Error(NonIntegerEntries) unless alpha.is_integral().
Fst fst_from_weight(const Weight& alpha, std::uint64_t skip);

}  // namespace tdeg
