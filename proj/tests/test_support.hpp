#ifndef HEMILAT_TEST_SUPPORT_HPP
#define HEMILAT_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <hemilat/hemilat.hpp>

// Brute-force oracles kept deliberately independent of the library's own
// computation paths: filters by scanning all subsets, congruences by
// scanning all partitions, implication spaces by scanning all tables.
namespace oracle {

using hemilat::FiniteSemilattice;
using hemilat::FilterSet;
using hemilat::HemiAlgebra;
using hemilat::Table;

inline std::vector<FilterSet> all_subset_filters(const FiniteSemilattice& s) {
  const int n = s.size();
  std::vector<FilterSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [&](int e) { return (bits >> e) & 1u; };
    if (!in(s.top())) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if (in(b) && !in(s.meet(a, b))) ok = false;
        if (s.leq(a, b) && !in(b)) ok = false;
      }
    }
    if (!ok) continue;
    FilterSet f(n);
    for (int e = 0; e < n; ++e)
      if (in(e)) f.insert(e);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](const FilterSet& l, const FilterSet& r) { return l.bits() < r.bits(); });
  return out;
}

/// All partitions of {0..n-1} as min-representative vectors.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::vector<int> first_of_block(n, -1);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<int> rep(n);
      std::vector<int> first(n, -1);
      for (int k = 0; k < n; ++k) {
        if (first[rgs[k]] < 0) first[rgs[k]] = k;
        rep[k] = first[rgs[k]];
      }
      out.push_back(rep);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

inline bool partition_compatible(const HemiAlgebra& alg, const std::vector<int>& rep) {
  const int n = alg.size();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (rep[a] != rep[a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (rep[b] != rep[b2]) continue;
          if (rep[alg.meet(a, b)] != rep[alg.meet(a2, b2)]) return false;
          if (rep[alg.imp(a, b)] != rep[alg.imp(a2, b2)]) return false;
        }
    }
  return true;
}

inline std::vector<std::vector<int>> compatible_partitions(const HemiAlgebra& alg) {
  std::vector<std::vector<int>> out;
  for (const auto& rep : all_partitions(alg.size()))
    if (partition_compatible(alg, rep)) out.push_back(rep);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every implication table satisfying the two laws, by scanning all n^(n*n)
/// tables. Only usable for very small n.
inline int count_hemi_implications_by_scan(const FiniteSemilattice& s) {
  const int n = s.size();
  const int cells = n * n;
  std::vector<int> val(cells, 0);
  int count = 0;
  for (;;) {
    Table imp(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) imp[a][b] = val[a * n + b];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (imp[a][a] != s.top()) ok = false;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (!s.leq(s.meet(a, imp[a][b]), b)) ok = false;
    if (ok) ++count;
    int k = cells;
    while (k > 0) {
      --k;
      if (++val[k] < n) break;
      val[k] = 0;
      if (k == 0) return count;
    }
  }
}

/// Naive independent generator: scan every assignment of the free meet
/// cells (top fixed at n-1) and keep the tables that fully validate.
inline int count_semilattices_by_scan(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j != n - 1) cells.emplace_back(i, j);
  std::vector<int> val(cells.size(), 0);
  int count = 0;
  for (;;) {
    Table meet(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      meet[a][a] = a;
      meet[a][n - 1] = a;
      meet[n - 1][a] = a;
    }
    for (std::size_t k = 0; k < cells.size(); ++k)
      meet[cells[k].first][cells[k].second] = meet[cells[k].second][cells[k].first] = val[k];
    try {
      FiniteSemilattice::validate(meet, n - 1);
      ++count;
    } catch (const hemilat::ValidationError&) {
    }
    if (cells.empty()) return count;
    std::size_t k = cells.size();
    while (k > 0) {
      --k;
      if (++val[k] < n) break;
      val[k] = 0;
      if (k == 0) return count;
    }
  }
}

/// The residuum max{c : a /\ c <= b} when it exists for every cell; on a
/// finite semilattice this is the unique implicative structure, if any.
inline std::optional<HemiAlgebra> residuum_algebra(const FiniteSemilattice& s) {
  const int n = s.size();
  Table imp(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> set;
      for (int c = 0; c < n; ++c)
        if (s.leq(s.meet(a, c), b)) set.push_back(c);
      int best = -1;
      for (int m : set) {
        bool greatest = true;
        for (int c : set)
          if (!s.leq(c, m)) {
            greatest = false;
            break;
          }
        if (greatest) {
          best = m;
          break;
        }
      }
      if (best < 0) return std::nullopt;
      imp[a][b] = best;
    }
  HemiAlgebra alg = HemiAlgebra::validate(s, imp);
  if (!hemilat::classify(alg).implicative.holds) return std::nullopt;
  return alg;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace oracle

#endif  // HEMILAT_TEST_SUPPORT_HPP
