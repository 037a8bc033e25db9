#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdeg/degree.hpp"

namespace tdeg {

struct LatticeNode {
  std::string id;     // "a6", "bottom", "zero"
  std::string label;  // "(6n+1)^3", "bottom", "0"
  CanonicalDegree degree;
};

struct LatticeEdge {
  std::string upper;
  std::string lower;
  /// Meta edge: Bottom3 lies below every OneT node but is covered by none.
  bool meta = false;

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

struct Lattice {
  std::uint64_t max = 0;
  std::vector<LatticeNode> nodes;
  std::vector<LatticeEdge> edges;
};

/// Hasse diagram of OneT(1..max) under divisibility (a covers a*q for prime
/// q), plus the Bottom3 meta edge and Zero below Bottom3.
Lattice divisor_lattice(std::uint64_t max);

std::string to_dot(const Lattice& lattice);

}  // namespace tdeg
