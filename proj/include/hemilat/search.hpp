#ifndef HEMILAT_SEARCH_HPP
#define HEMILAT_SEARCH_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "parallel.hpp"

namespace hemilat {

struct EnumerationBound {
  int max_size = 5;
  bool modulo_isomorphism = true;
};

/** A found counterexample: the algebras involved, the name of the violated
    property, and the violating tuple. Re-evaluating the property on the
    witness must reproduce the violation. */
struct SearchWitness {
  std::string property;
  std::vector<int> tuple;
  std::vector<HemiAlgebra> algebras;
};

/// perm maps old index to new index; top and labels move along.
inline FiniteSemilattice relabel(const FiniteSemilattice& s, std::span<const int> perm) {
  const int n = s.size();
  Table meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) meet[perm[a]][perm[b]] = perm[s.meet(a, b)];
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    labels.resize(n);
    for (int a = 0; a < n; ++a) labels[perm[a]] = s.labels()[a];
  }
  return FiniteSemilattice::validate(std::move(meet), perm[s.top()], std::nullopt,
                                     std::move(labels));
}

inline HemiAlgebra relabel(const HemiAlgebra& alg, std::span<const int> perm) {
  const int n = alg.size();
  Table imp(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) imp[perm[a]][perm[b]] = perm[alg.imp(a, b)];
  return HemiAlgebra::validate(relabel(alg.base(), perm), std::move(imp));
}

namespace detail {

/** Canonical relabeling search shared by both canonical_form overloads.
    Isomorphisms fix top and bottom (both are definable), so candidates send
    bottom to 0 and top to n-1 and only permute the interior. Interior
    elements are grouped by label-independent invariants; positions are
    handed out class by class in sorted invariant order, and the byte string
    is minimized over within-class permutations only. */
class CanonicalSearch {
public:
  CanonicalSearch(const FiniteSemilattice& s, const std::vector<int>* imp_flat)
      : s_(s), n_(s.size()), imp_(imp_flat) {}

  std::string run() {
    std::vector<int> perm(n_, -1);
    if (n_ == 1) {
      perm[0] = 0;
      return serialize(perm);
    }
    perm[s_.bottom()] = 0;
    perm[s_.top()] = n_ - 1;

    std::map<std::vector<int>, std::vector<int>> groups;
    for (int e = 0; e < n_; ++e) {
      if (e == s_.bottom() || e == s_.top()) continue;
      groups[invariant(e)].push_back(e);
    }
    int next_pos = 1;
    std::vector<std::pair<std::vector<int>, int>> classes;  // members, first position
    for (auto& [key, members] : groups) {
      classes.emplace_back(members, next_pos);
      next_pos += static_cast<int>(members.size());
    }

    std::string best;
    minimize(perm, classes, 0, best);
    return best;
  }

private:
  std::vector<int> invariant(int e) const {
    int down = 0, up = 0;
    for (int b = 0; b < n_; ++b) {
      if (s_.leq(b, e)) ++down;
      if (s_.leq(e, b)) ++up;
    }
    std::vector<int> key{down, up};
    if (imp_) {
      int row_top = 0, col_top = 0, row_bot = 0, col_bot = 0;
      for (int b = 0; b < n_; ++b) {
        if (at_imp(e, b) == s_.top()) ++row_top;
        if (at_imp(b, e) == s_.top()) ++col_top;
        if (at_imp(e, b) == s_.bottom()) ++row_bot;
        if (at_imp(b, e) == s_.bottom()) ++col_bot;
      }
      key.insert(key.end(), {row_top, col_top, row_bot, col_bot});
    }
    return key;
  }

  int at_imp(int a, int b) const { return (*imp_)[static_cast<std::size_t>(a) * n_ + b]; }

  void minimize(std::vector<int>& perm,
                std::vector<std::pair<std::vector<int>, int>>& classes, std::size_t k,
                std::string& best) {
    if (k == classes.size()) {
      std::string bytes = serialize(perm);
      if (best.empty() || bytes < best) best = std::move(bytes);
      return;
    }
    auto& [members, first_pos] = classes[k];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i)
        perm[members[i]] = first_pos + static_cast<int>(i);
      minimize(perm, classes, k + 1, best);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  std::string serialize(const std::vector<int>& perm) const {
    std::string out;
    out.reserve(2 + static_cast<std::size_t>(n_) * n_ * (imp_ ? 2 : 1));
    out.push_back(static_cast<char>(n_));
    std::vector<int> inv(n_);
    for (int e = 0; e < n_; ++e) inv[perm[e]] = e;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        out.push_back(static_cast<char>(perm[s_.meet(inv[a], inv[b])]));
    if (imp_) {
      out.push_back('\x7f');
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          out.push_back(static_cast<char>(perm[at_imp(inv[a], inv[b])]));
    }
    return out;
  }

  const FiniteSemilattice& s_;
  int n_;
  const std::vector<int>* imp_;
};

}  // namespace detail

/// Identical strings exactly for isomorphic semilattices.
inline std::string canonical_form(const FiniteSemilattice& s) {
  return detail::CanonicalSearch(s, nullptr).run();
}

/// Identical strings exactly for isomorphic algebras.
inline std::string canonical_form(const HemiAlgebra& alg) {
  const int n = alg.size();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = alg.imp(a, b);
  return detail::CanonicalSearch(alg.base(), &flat).run();
}

/** Streams every bounded meet-semilattice with top at index n-1, by size
    and then lexicographic meet table; with modulo_isomorphism, only the
    first representative of each isomorphism class. The callback returns
    false to stop the stream. */
inline void for_each_semilattice(const EnumerationBound& bound,
                                 const std::function<bool(const FiniteSemilattice&)>& fn) {
  if (bound.max_size < 1) throw UsageError("max_size must be at least 1");
  for (int n = 1; n <= bound.max_size; ++n) {
    const int top = n - 1;
    std::vector<int> meet(static_cast<std::size_t>(n) * n, -1);
    auto at = [&](int a, int b) -> int& { return meet[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) {
      at(a, a) = a;
      at(a, top) = a;
      at(top, a) = a;
    }
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (j != top) cells.emplace_back(i, j);

    // Partial associativity: reject as soon as any fully determined triple
    // disagrees; complete tables are then genuine semilattices.
    auto consistent = [&]() {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const int ab = at(a, b);
          if (ab < 0) continue;
          for (int c = 0; c < n; ++c) {
            const int bc = at(b, c);
            if (bc < 0) continue;
            const int l = at(ab, c);
            const int r = at(a, bc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
        }
      return true;
    };

    std::set<std::string> seen;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (stop) return;
      if (k == cells.size()) {
        Table table = FiniteSemilattice::unflatten(meet, n);
        FiniteSemilattice s = FiniteSemilattice::validate(std::move(table), top);
        if (bound.modulo_isomorphism && !seen.insert(canonical_form(s)).second) return;
        if (!fn(s)) stop = true;
        return;
      }
      auto [i, j] = cells[k];
      for (int v = 0; v < n && !stop; ++v) {
        at(i, j) = v;
        at(j, i) = v;
        if (consistent()) rec(k + 1);
      }
      at(i, j) = -1;
      at(j, i) = -1;
    };
    rec(0);
    if (stop) return;
  }
}

inline std::vector<FiniteSemilattice> enumerate_semilattices(const EnumerationBound& bound) {
  std::vector<FiniteSemilattice> out;
  for_each_semilattice(bound, [&](const FiniteSemilattice& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/** Streams every implication table on S satisfying the two defining laws,
    in lexicographic table order. The pointwise law constrains each cell
    independently, so the candidates are restricted per cell up front and
    the stream is their cartesian product. */
inline void for_each_hemi_implication(const FiniteSemilattice& s,
                                      const std::function<bool(const HemiAlgebra&)>& fn) {
  const int n = s.size();
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      cells.emplace_back(a, b);
      std::vector<int> vals;
      for (int v = 0; v < n; ++v)
        if (s.leq(s.meet(a, v), b)) vals.push_back(v);
      candidates.push_back(std::move(vals));
    }

  Table imp(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) imp[a][a] = s.top();
  std::vector<std::size_t> odo(cells.size(), 0);
  for (;;) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      imp[cells[k].first][cells[k].second] = candidates[k][odo[k]];
    if (!fn(HemiAlgebra::validate(s, imp))) return;
    std::size_t k = cells.size();
    while (k > 0) {
      --k;
      if (++odo[k] < candidates[k].size()) break;
      odo[k] = 0;
      if (k == 0) return;
    }
    if (cells.empty()) return;
  }
}

inline std::vector<HemiAlgebra> enumerate_hemi_implications(const FiniteSemilattice& s) {
  std::vector<HemiAlgebra> out;
  for_each_hemi_implication(s, [&](const HemiAlgebra& alg) {
    out.push_back(alg);
    return true;
  });
  return out;
}

namespace detail {

inline std::vector<std::string> product_labels(const FiniteSemilattice& lhs,
                                               const FiniteSemilattice& rhs) {
  if (lhs.labels().empty() && rhs.labels().empty()) return {};
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(lhs.size()) * rhs.size());
  for (int i = 0; i < lhs.size(); ++i)
    for (int j = 0; j < rhs.size(); ++j) labels.push_back(lhs.label(i) + "," + rhs.label(j));
  return labels;
}

}  // namespace detail

/// Direct product; carriers flatten row-major (index = i * |rhs| + j).
inline FiniteSemilattice product(const FiniteSemilattice& lhs, const FiniteSemilattice& rhs) {
  const int m = rhs.size();
  const int n = lhs.size() * m;
  Table meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      meet[a][b] = lhs.meet(a / m, b / m) * m + rhs.meet(a % m, b % m);
  return FiniteSemilattice::validate(std::move(meet), lhs.top() * m + rhs.top(), std::nullopt,
                                     detail::product_labels(lhs, rhs));
}

/// Direct product with pointwise operations; the laws carry over pointwise.
inline HemiAlgebra product(const HemiAlgebra& lhs, const HemiAlgebra& rhs) {
  const int m = rhs.size();
  const int n = lhs.size() * m;
  Table imp(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      imp[a][b] = lhs.imp(a / m, b / m) * m + rhs.imp(a % m, b % m);
  return HemiAlgebra::validate(product(lhs.base(), rhs.base()), std::move(imp));
}

/** Searches pairs of class members whose direct product leaves the class,
    witnessing that none of the six classes is closed under products. Pairs
    are scanned in enumeration order; the first witness is returned. */
inline std::optional<SearchWitness> find_product_escape(ImplicationKind kind,
                                                        const EnumerationBound& bound,
                                                        int jobs = 1) {
  const std::vector<FiniteSemilattice> factors = enumerate_semilattices(bound);
  const std::size_t k = factors.size();
  auto eval = [&](std::size_t p) -> std::optional<SearchWitness> {
    const FiniteSemilattice& s1 = factors[p / k];
    const FiniteSemilattice& s2 = factors[p % k];
    HemiAlgebra a1 = build_implication(s1, kind);
    HemiAlgebra a2 = build_implication(s2, kind);
    HemiAlgebra prod = product(a1, a2);
    auto cell = detail::first_kind_mismatch(prod, kind);
    if (!cell) return std::nullopt;
    return SearchWitness{"product-escape", {cell->first, cell->second},
                         {std::move(a1), std::move(a2), std::move(prod)}};
  };
  auto hit = parallel_first<SearchWitness>(k * k, jobs, eval);
  if (!hit) return std::nullopt;
  return std::move(hit->second);
}

/** Finds the enumeration-first algebra satisfying h5 but not h4, and the
    first failing h5; these witness that the two equational subvarieties are
    properly nested. Either entry may be absent within the bound. */
inline std::vector<SearchWitness> find_variety_separators(const EnumerationBound& bound) {
  std::optional<SearchWitness> h5_not_h4;
  std::optional<SearchWitness> not_h5;
  for_each_semilattice(bound, [&](const FiniteSemilattice& s) {
    bool keep_going = true;
    for_each_hemi_implication(s, [&](const HemiAlgebra& alg) {
      const Verdict h4 = detail::check_h4(alg);
      const Verdict h5 = detail::check_h5(alg);
      if (!h5_not_h4 && h5.holds && !h4.holds)
        h5_not_h4 = SearchWitness{"h5-not-h4", h4.witness, {alg}};
      if (!not_h5 && !h5.holds) not_h5 = SearchWitness{"not-h5", h5.witness, {alg}};
      keep_going = !(h5_not_h4 && not_h5);
      return keep_going;
    });
    return keep_going;
  });
  std::vector<SearchWitness> out;
  if (h5_not_h4) out.push_back(std::move(*h5_not_h4));
  if (not_h5) out.push_back(std::move(*not_h5));
  return out;
}

}  // namespace hemilat

#endif  // HEMILAT_SEARCH_HPP
