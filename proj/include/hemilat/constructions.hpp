#ifndef HEMILAT_CONSTRUCTIONS_HPP
#define HEMILAT_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "algebra.hpp"

namespace hemilat {

/** The six canonical implications definable on any finite bounded
    semilattice. Each is "top on a diagonal-like case, something small
    otherwise"; the tag names the case split and the else-branch. */
enum class ImplicationKind {
  DiscreteZero,     // top if a = b,  else bottom
  OrderConsequent,  // top if a <= b, else b
  EqConsequent,     // top if a = b,  else b
  OrderMeet,        // top if a <= b, else a /\ b
  EqMeet,           // top if a = b,  else a /\ b
  OrderZero,        // top if a <= b, else bottom
};

inline constexpr std::array<ImplicationKind, 6> all_implication_kinds{
    ImplicationKind::DiscreteZero, ImplicationKind::OrderConsequent,
    ImplicationKind::EqConsequent, ImplicationKind::OrderMeet,
    ImplicationKind::EqMeet,       ImplicationKind::OrderZero};

inline std::string_view kind_name(ImplicationKind kind) {
  switch (kind) {
    case ImplicationKind::DiscreteZero: return "discrete-zero";
    case ImplicationKind::OrderConsequent: return "order-consequent";
    case ImplicationKind::EqConsequent: return "eq-consequent";
    case ImplicationKind::OrderMeet: return "order-meet";
    case ImplicationKind::EqMeet: return "eq-meet";
    case ImplicationKind::OrderZero: return "order-zero";
  }
  return "?";
}

inline std::optional<ImplicationKind> kind_from_name(std::string_view name) {
  for (ImplicationKind k : all_implication_kinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

namespace detail {

inline int kind_value(const FiniteSemilattice& s, ImplicationKind kind, int a, int b) {
  switch (kind) {
    case ImplicationKind::DiscreteZero: return a == b ? s.top() : s.bottom();
    case ImplicationKind::OrderConsequent: return s.leq(a, b) ? s.top() : b;
    case ImplicationKind::EqConsequent: return a == b ? s.top() : b;
    case ImplicationKind::OrderMeet: return s.leq(a, b) ? s.top() : s.meet(a, b);
    case ImplicationKind::EqMeet: return a == b ? s.top() : s.meet(a, b);
    case ImplicationKind::OrderZero: return s.leq(a, b) ? s.top() : s.bottom();
  }
  throw UsageError("unknown implication kind");
}

/// First cell where the algebra's implication differs from the kind's table.
inline std::optional<std::pair<int, int>> first_kind_mismatch(const HemiAlgebra& alg,
                                                              ImplicationKind kind) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (alg.imp(a, b) != kind_value(alg.base(), kind, a, b)) return {{a, b}};
  return std::nullopt;
}

}  // namespace detail

/** Builds the implication of the given kind on S. The result is validated,
    which is the computational content of the claim that each construction
    yields a hemiimplicative semilattice. */
inline HemiAlgebra build_implication(const FiniteSemilattice& s, ImplicationKind kind) {
  const int n = s.size();
  Table imp(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) imp[a][b] = detail::kind_value(s, kind, a, b);
  return HemiAlgebra::validate(s, std::move(imp));
}

/// Membership in the class of algebras whose implication is the given kind.
inline bool membership_in_kind(const HemiAlgebra& alg, ImplicationKind kind) {
  return !detail::first_kind_mismatch(alg, kind).has_value();
}

}  // namespace hemilat

#endif  // HEMILAT_CONSTRUCTIONS_HPP
