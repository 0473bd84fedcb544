#ifndef HEMILAT_CLASSIFY_HPP
#define HEMILAT_CLASSIFY_HPP

#include <stdexcept>

#include "algebra.hpp"

namespace hemilat {

/** Axiom and variety-membership flags for one algebra, each with the first
    violating tuple when false. h2/h3 are trivially true on a validated
    algebra but are re-derived here so the report stands on its own. */
struct ClassReport {
  Verdict h2;
  Verdict h3;
  Verdict h4;           // a -> (a /\ b) = a -> b
  Verdict h5;           // (a /\ b) -> b = top
  Verdict symmetric;    // a -> b = b -> a
  Verdict condition_s;  // a~b = (a ~ (a/\b)) /\ (b ~ (a/\b)) with ~ := ->
  Verdict implicative;  // a /\ b <= c  iff  a <= b -> c
  Verdict es_member;    // conditions 2) - 4') of the equivalential class
};

namespace detail {

inline Verdict check_h2(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    if (alg.imp(a, a) != alg.top()) return Verdict::fail("h2", {a});
  return Verdict::ok();
}

inline Verdict check_h3(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (!alg.leq(alg.meet(a, alg.imp(a, b)), b)) return Verdict::fail("h3", {a, b});
  return Verdict::ok();
}

inline Verdict check_h4(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (alg.imp(a, alg.meet(a, b)) != alg.imp(a, b)) return Verdict::fail("h4", {a, b});
  return Verdict::ok();
}

inline Verdict check_h5(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (alg.imp(alg.meet(a, b), b) != alg.top()) return Verdict::fail("h5", {a, b});
  return Verdict::ok();
}

inline Verdict check_symmetric(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (alg.imp(a, b) != alg.imp(b, a)) return Verdict::fail("symmetric", {a, b});
  return Verdict::ok();
}

inline Verdict check_condition_s(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      const int m = alg.meet(a, b);
      if (alg.imp(a, b) != alg.meet(alg.imp(a, m), alg.imp(b, m)))
        return Verdict::fail("condition-s", {a, b});
    }
  return Verdict::ok();
}

inline Verdict check_implicative(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      for (int c = 0; c < alg.size(); ++c)
        if (alg.leq(alg.meet(a, b), c) != alg.leq(a, alg.imp(b, c)))
          return Verdict::fail("implicative", {a, b, c});
  return Verdict::ok();
}

// Equivalential conditions 2) through 4'), checked in order. Condition 1)
// (bounded semilattice) is the validated base.
inline Verdict check_es_cond2(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    if (alg.imp(a, a) != alg.top()) return Verdict::fail("es-cond2", {a});
  return Verdict::ok();
}

inline Verdict check_es_cond3(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      const int s = alg.imp(a, b);
      if (alg.meet(a, s) != alg.meet(b, s)) return Verdict::fail("es-cond3", {a, b});
    }
  return Verdict::ok();
}

inline Verdict check_es_cond4(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      for (int c = 0; c < alg.size(); ++c)
        if (alg.meet(a, c) == alg.meet(b, c) && !alg.leq(c, alg.imp(a, b)))
          return Verdict::fail("es-cond4", {a, b, c});
  return Verdict::ok();
}

inline Verdict check_es_cond4p(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      for (int c = 0; c < alg.size(); ++c)
        if (!alg.leq(alg.meet(c, alg.imp(alg.meet(a, c), alg.meet(b, c))), alg.imp(a, b)))
          return Verdict::fail("es-cond4p", {a, b, c});
  return Verdict::ok();
}

inline Verdict check_es_member(const HemiAlgebra& alg) {
  if (auto v = check_es_cond2(alg); !v) return v;
  if (auto v = check_es_cond3(alg); !v) return v;
  if (auto v = check_es_cond4(alg); !v) return v;
  if (auto v = check_es_cond4p(alg); !v) return v;
  return Verdict::ok();
}

}  // namespace detail

inline ClassReport classify(const HemiAlgebra& alg) {
  ClassReport r;
  r.h2 = detail::check_h2(alg);
  r.h3 = detail::check_h3(alg);
  r.h4 = detail::check_h4(alg);
  r.h5 = detail::check_h5(alg);
  r.symmetric = detail::check_symmetric(alg);
  r.condition_s = detail::check_condition_s(alg);
  r.implicative = detail::check_implicative(alg);
  r.es_member = detail::check_es_member(alg);
  // A residuated implication satisfies both extra equations.
  if (r.implicative.holds && (!r.h4.holds || !r.h5.holds))
    throw std::logic_error("implicative algebra failed h4/h5");
  return r;
}

/** Whether a <= b iff a -> b = top, for all pairs. The top->order direction
    holds in every hemiimplicative semilattice; the reflection direction is
    equivalent to h5. */
inline Verdict check_order_reflection(const HemiAlgebra& alg) {
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      if (alg.leq(a, b) != (alg.imp(a, b) == alg.top()))
        return Verdict::fail("order-reflection", {a, b});
  return Verdict::ok();
}

}  // namespace hemilat

#endif  // HEMILAT_CLASSIFY_HPP
