#include "tdeg/lattice.hpp"

#include <sstream>

#include "tdeg/error.hpp"

namespace tdeg {

namespace {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::string node_id(std::uint64_t a) { return "a" + std::to_string(a); }

std::string node_label(std::uint64_t a) { return "(" + (a == 1 ? std::string() : std::to_string(a)) + "n+1)^3"; }

}  // namespace

Lattice divisor_lattice(std::uint64_t max) {
  if (max < 1) throw Error(ErrorKind::InvalidParam, "lattice bound must be >= 1");
  Lattice l;
  l.max = max;
  for (std::uint64_t a = 1; a <= max; ++a) l.nodes.push_back({node_id(a), node_label(a), CanonicalDegree::one_t(a)});
  l.nodes.push_back({"bottom", "bottom", CanonicalDegree::bottom()});
  l.nodes.push_back({"zero", "0", CanonicalDegree::zero()});
  for (std::uint64_t a = 1; a <= max; ++a)
    for (std::uint64_t q = 2; a * q <= max; ++q)
      if (is_prime(q)) l.edges.push_back({node_id(a), node_id(a * q), false});
  l.edges.push_back({node_id(1), "bottom", true});
  l.edges.push_back({"bottom", "zero", false});
  return l;
}

std::string to_dot(const Lattice& l) {
  std::ostringstream os;
  os << "// Transducer degrees below <n^3>; an edge points from a degree to one it covers.\n"
     << "// The dashed edge leaving the 1-transform cluster is a meta edge: bottom lies\n"
     << "// below every (an+1)^3 but is covered by none of them.\n"
     << "digraph degrees {\n"
     << "  compound=true;\n"
     << "  rankdir=TB;\n"
     << "  subgraph cluster_onet {\n"
     << "    label=\"1-transforms\";\n";
  for (const auto& n : l.nodes)
    if (n.degree.kind() == CanonicalDegree::Kind::OneT) os << "    " << n.id << " [label=\"" << n.label << "\"];\n";
  os << "  }\n";
  for (const auto& n : l.nodes)
    if (n.degree.kind() != CanonicalDegree::Kind::OneT) os << "  " << n.id << " [label=\"" << n.label << "\"];\n";
  for (const auto& e : l.edges) {
    os << "  " << e.upper << " -> " << e.lower;
    if (e.meta) os << " [ltail=cluster_onet, style=dashed, label=\"below all OneT\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tdeg
