#ifndef HEMILAT_FIXTURES_HPP
#define HEMILAT_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "json_io.hpp"

namespace hemilat {

/** Built-in corpus: the named algebras used throughout the desk-scale
    regressions. Semilattice fixtures are "trivial", "chain2".."chain6" and
    "B4"; each of those also exists with any of the six implications as
    "<name>-<kind>" (e.g. "B4-order-zero"); "paper5" is the five-element
    symmetric algebra given by its ~ table. */
namespace fixtures {

inline const std::vector<std::string>& semilattice_names() {
  static const std::vector<std::string> names{"trivial", "chain2", "chain3", "chain4",
                                              "chain5",  "chain6", "B4"};
  return names;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out = semilattice_names();
  for (const auto& base : semilattice_names())
    for (ImplicationKind kind : all_implication_kinds)
      out.push_back(base + "-" + std::string(kind_name(kind)));
  out.push_back("paper5");
  return out;
}

inline FiniteSemilattice chain(int n) {
  Table meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) meet[a][b] = std::min(a, b);
  std::vector<std::string> labels;
  if (n == 1) {
    labels = {"1"};
  } else if (n == 3) {
    labels = {"0", "m", "1"};
  } else {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  return FiniteSemilattice::validate(std::move(meet), n - 1, std::nullopt, std::move(labels));
}

inline FiniteSemilattice b4() {
  return FiniteSemilattice::validate({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
                                     3, 0, {"0", "x", "y", "1"});
}

/// The bounded lattice 0 < c < a,b < 1 with its symmetric operation ~.
inline HemiAlgebra paper5() {
  FiniteSemilattice base = FiniteSemilattice::validate(
      {{0, 0, 0, 0, 0},
       {0, 1, 3, 3, 1},
       {0, 3, 2, 3, 2},
       {0, 3, 3, 3, 3},
       {0, 1, 2, 3, 4}},
      4, 0, {"0", "a", "b", "c", "1"});
  return HemiAlgebra::validate(base, {{4, 0, 0, 0, 0},
                                      {0, 4, 0, 3, 1},
                                      {0, 0, 4, 3, 2},
                                      {0, 3, 3, 4, 3},
                                      {0, 1, 2, 3, 4}});
}

inline std::optional<FiniteSemilattice> semilattice(const std::string& name) {
  if (name == "trivial") return chain(1);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "chain4") return chain(4);
  if (name == "chain5") return chain(5);
  if (name == "chain6") return chain(6);
  if (name == "B4") return b4();
  return std::nullopt;
}

inline std::optional<ParsedAlgebra> get(const std::string& name) {
  if (auto s = semilattice(name)) return ParsedAlgebra{*s, std::nullopt};
  if (name == "paper5") {
    HemiAlgebra alg = paper5();
    return ParsedAlgebra{alg.base(), alg};
  }
  for (const auto& base : semilattice_names()) {
    if (name.size() <= base.size() + 1 || name.compare(0, base.size(), base) != 0 ||
        name[base.size()] != '-')
      continue;
    auto kind = kind_from_name(name.substr(base.size() + 1));
    if (!kind) break;
    FiniteSemilattice s = *semilattice(base);
    return ParsedAlgebra{s, build_implication(s, *kind)};
  }
  return std::nullopt;
}

/// All fixtures that carry an implication; the regression corpus.
inline std::vector<HemiAlgebra> hemi_corpus() {
  std::vector<HemiAlgebra> out;
  for (const auto& base : semilattice_names())
    for (ImplicationKind kind : all_implication_kinds)
      out.push_back(build_implication(*semilattice(base), kind));
  out.push_back(paper5());
  return out;
}

}  // namespace fixtures
}  // namespace hemilat

#endif  // HEMILAT_FIXTURES_HPP
