#ifndef HEMILAT_DOT_HPP
#define HEMILAT_DOT_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "congruence.hpp"

namespace hemilat {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Hasse diagram of the semilattice order as a DOT digraph (edges point up).
inline std::string hasse_dot(const FiniteSemilattice& s) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int a = 0; a < s.size(); ++a)
    os << "  n" << a << " [label=\"" << detail::dot_escape(s.label(a)) << "\"];\n";
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (a == b || !s.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < s.size(); ++c)
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) {
          cover = false;
          break;
        }
      if (cover) os << "  n" << a << " -> n" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

/// Congruence lattice (one node per congruent filter) ordered by inclusion.
inline std::string congruence_lattice_dot(
    const FiniteSemilattice& s,
    const std::vector<std::pair<FilterSet, CongruencePartition>>& lattice) {
  auto subset = [](const FilterSet& lhs, const FilterSet& rhs) {
    return (lhs.bits() & ~rhs.bits()) == 0 && lhs.bits() != rhs.bits();
  };
  std::ostringstream os;
  os << "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    os << "  f" << i << " [label=\"{";
    const auto elems = lattice[i].first.elements();
    for (std::size_t k = 0; k < elems.size(); ++k)
      os << (k ? "," : "") << detail::dot_escape(s.label(elems[k]));
    os << "}\"];\n";
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!subset(lattice[i].first, lattice[j].first)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < lattice.size(); ++k)
        if (k != i && k != j && subset(lattice[i].first, lattice[k].first) &&
            subset(lattice[k].first, lattice[j].first)) {
          cover = false;
          break;
        }
      if (cover) os << "  f" << i << " -> f" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hemilat

#endif  // HEMILAT_DOT_HPP
