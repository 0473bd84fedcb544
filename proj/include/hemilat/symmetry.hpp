#ifndef HEMILAT_SYMMETRY_HPP
#define HEMILAT_SYMMETRY_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "algebra.hpp"
#include "classify.hpp"

namespace hemilat {

/** A hemiimplicative semilattice whose implication is symmetric:
    a ~ b = b ~ a for all a, b. The refinement type exists because the
    derived arrow and the reverse round-trip are defined only here. */
class SymmetricAlgebra {
public:
  static SymmetricAlgebra validate(HemiAlgebra alg) {
    if (auto v = detail::check_symmetric(alg); !v)
      throw ValidationError("NotSymmetric", v.witness);
    return SymmetricAlgebra(std::move(alg));
  }

  const HemiAlgebra& algebra() const { return alg_; }
  int size() const { return alg_.size(); }
  int sim(int a, int b) const { return alg_.imp(a, b); }
  int meet(int a, int b) const { return alg_.meet(a, b); }

private:
  explicit SymmetricAlgebra(HemiAlgebra alg) : alg_(std::move(alg)) {}
  HemiAlgebra alg_;
};

/** Replaces the implication by a <-> b. The result is always a symmetric
    hemiimplicative semilattice; validation enforces that obligation. */
inline SymmetricAlgebra symmetrize(const HemiAlgebra& alg) {
  const int n = alg.size();
  Table sim(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) sim[a][b] = alg.rla(a, b);
  return SymmetricAlgebra::validate(HemiAlgebra::validate(alg.base(), std::move(sim)));
}

/** The derived arrow a => b := a ~ (a /\ b) of a symmetric algebra. The
    output always satisfies h4 and agrees with ~ on comparable pairs with
    b <= a; both facts are asserted here. */
inline HemiAlgebra derive_arrow(const SymmetricAlgebra& sym) {
  const int n = sym.size();
  Table arrow(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) arrow[a][b] = sym.sim(a, sym.meet(a, b));
  HemiAlgebra out = HemiAlgebra::validate(sym.algebra().base(), std::move(arrow));
  if (auto v = detail::check_h4(out); !v)
    throw std::logic_error("derived arrow violated h4");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (out.leq(b, a) && out.imp(a, b) != sym.sim(a, b))
        throw std::logic_error("derived arrow disagrees with ~ below the diagonal");
  return out;
}

/** Forward round-trip: rebuilding the arrow from the symmetrization
    recovers the original implication. Holds exactly on the h4 side of the
    term equivalence. */
inline Verdict check_roundtrip_h4(const HemiAlgebra& alg) {
  HemiAlgebra back = derive_arrow(symmetrize(alg));
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (back.imp(a, b) != alg.imp(a, b)) return Verdict::fail("roundtrip-h4", {a, b});
  return Verdict::ok();
}

/** Reverse round-trip: symmetrizing the derived arrow recovers ~. Holds
    exactly when the symmetric algebra satisfies condition (S). */
inline Verdict check_roundtrip_symmetric(const SymmetricAlgebra& sym) {
  SymmetricAlgebra back = symmetrize(derive_arrow(sym));
  for (int a = 0; a < sym.size(); ++a)
    for (int b = 0; b < sym.size(); ++b)
      if (back.sim(a, b) != sym.sim(a, b))
        return Verdict::fail("roundtrip-symmetric", {a, b});
  return Verdict::ok();
}

namespace detail {

/// max{c : a /\ c = b /\ c} under the semilattice order, if it exists.
inline std::optional<int> max_indistinguishing(const FiniteSemilattice& s, int a, int b) {
  std::vector<int> set;
  for (int c = 0; c < s.size(); ++c)
    if (s.meet(a, c) == s.meet(b, c)) set.push_back(c);
  for (int m : set) {
    bool greatest = true;
    for (int c : set)
      if (!s.leq(c, m)) { greatest = false; break; }
    if (greatest) return m;
  }
  return std::nullopt;
}

/// ~ computes max{c : a /\ c = b /\ c} pointwise.
inline Verdict check_sim_max_formula(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      auto m = max_indistinguishing(alg.base(), a, b);
      if (!m || *m != alg.imp(a, b)) return Verdict::fail("sim-max-formula", {a, b});
    }
  return Verdict::ok();
}

inline Verdict check_tables_equal(const HemiAlgebra& lhs, const HemiAlgebra& rhs,
                                  const char* property) {
  for (int a = 0; a < lhs.size(); ++a)
    for (int b = 0; b < lhs.size(); ++b)
      if (lhs.imp(a, b) != rhs.imp(a, b)) return Verdict::fail(property, {a, b});
  return Verdict::ok();
}

}  // namespace detail

/** Instance-wise check of the term equivalence between residuated algebras
    and their equivalential counterparts.

    For a residuated (implicative) algebra: the symmetrization satisfies the
    equivalential conditions (including the max formula), the derived arrow
    recovers the original implication, and the derived arrow is residuated.

    For an equivalential member (symmetric, conditions 2-4'): the derived
    arrow is residuated and its symmetrization recovers ~.

    In both directions conditions 4) and 4') are evaluated independently and
    must agree. Throws NotApplicable when the algebra is on neither side. */
inline Verdict check_is_es_equivalence(const HemiAlgebra& alg) {
  const ClassReport report = classify(alg);
  if (report.implicative.holds) {
    SymmetricAlgebra sym = symmetrize(alg);
    const HemiAlgebra& s = sym.algebra();
    if (auto v = detail::check_es_member(s); !v) return v;
    if (detail::check_es_cond4(s).holds != detail::check_es_cond4p(s).holds)
      return Verdict::fail("es-cond4-equivalence", {});
    if (auto v = detail::check_sim_max_formula(s); !v) return v;
    HemiAlgebra derived = derive_arrow(sym);
    if (auto v = detail::check_tables_equal(derived, alg, "derived-arrow-recovers"); !v)
      return v;
    if (auto v = detail::check_implicative(derived); !v)
      return Verdict::fail("derived-arrow-residuation", v.witness);
    return Verdict::ok();
  }
  if (report.es_member.holds) {
    SymmetricAlgebra sym = SymmetricAlgebra::validate(alg);
    if (detail::check_es_cond4(alg).holds != detail::check_es_cond4p(alg).holds)
      return Verdict::fail("es-cond4-equivalence", {});
    if (auto v = detail::check_sim_max_formula(alg); !v) return v;
    HemiAlgebra derived = derive_arrow(sym);
    if (auto v = detail::check_implicative(derived); !v)
      return Verdict::fail("derived-arrow-residuation", v.witness);
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b)
        if (alg.imp(a, b) != derived.rla(a, b))
          return Verdict::fail("sim-equals-derived-rla", {a, b});
    return Verdict::ok();
  }
  throw ValidationError("NotApplicable", report.implicative.witness);
}

}  // namespace hemilat

#endif  // HEMILAT_SYMMETRY_HPP
