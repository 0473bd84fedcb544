#ifndef HEMILAT_ALGEBRA_HPP
#define HEMILAT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hemilat {

using Table = std::vector<std::vector<int>>;

/** Outcome of an exhaustively checked law: either it holds, or `witness`
    is the lexicographically first violating tuple of element indices. */
struct Verdict {
  bool holds = true;
  std::string property;
  std::vector<int> witness;

  explicit operator bool() const { return holds; }

  static Verdict ok() { return {}; }
  static Verdict fail(std::string property, std::vector<int> witness) {
    return Verdict{false, std::move(property), std::move(witness)};
  }
};

/** An algebraic law failed during eager validation. `code` is a stable
    machine-readable name; `witness` re-evaluates to the violation. */
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, std::vector<int> witness)
      : std::runtime_error(format(code, witness)),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

private:
  static std::string format(const std::string& code, const std::vector<int>& w) {
    std::ostringstream os;
    os << code << " at (";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
  }

  std::string code_;
  std::vector<int> witness_;
};

/** Malformed input (shape errors, unknown names, bad flags). Maps to CLI
    exit code 2, as opposed to ValidationError which maps to exit 1. */
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/** Finite bounded meet-semilattice on elements 0..n-1, given by its total
    meet table. The partial order is the one induced by the infimum:
    a <= b iff a /\ b = a. Values are immutable after validation, so they
    can be shared freely across threads.

    A finite semilattice with top always has a least element (the meet of
    all elements); it is derived at validation time and always stored. */
class FiniteSemilattice {
public:
  static FiniteSemilattice validate(Table meet, int top,
                                    std::optional<int> bottom = std::nullopt,
                                    std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(meet.size());
    if (n <= 0) throw UsageError("meet: table must be non-empty");
    if (static_cast<std::size_t>(n) != meet.size())
      throw UsageError("meet: table too large");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : meet) {
      if (static_cast<int>(row.size()) != n)
        throw UsageError("meet: table is not size x size");
      for (int v : row) {
        if (v < 0 || v >= n) throw UsageError("meet: entry out of range");
        flat.push_back(v);
      }
    }
    if (top < 0 || top >= n) throw UsageError("top: index out of range");
    if (bottom && (*bottom < 0 || *bottom >= n))
      throw UsageError("bottom: index out of range");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw UsageError("labels: expected one label per element");

    auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
      if (at(a, a) != a) throw ValidationError("NotIdempotent", {a});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (at(a, b) != at(b, a)) throw ValidationError("NotCommutative", {a, b});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw ValidationError("NotAssociative", {a, b, c});
    for (int a = 0; a < n; ++a)
      if (at(a, top) != a) throw ValidationError("TopNotGreatest", {a});

    // Least element: fold the meet over all elements. Associativity and
    // commutativity are already established, so the fold order is moot.
    int least = 0;
    for (int a = 1; a < n; ++a) least = at(least, a);
    if (bottom) {
      for (int a = 0; a < n; ++a)
        if (at(a, *bottom) != *bottom) throw ValidationError("BottomNotLeast", {a});
      // A least element is unique, so a valid declared bottom equals the
      // derived one; keep the declared index.
      least = *bottom;
    }
    return FiniteSemilattice(n, std::move(flat), top, least, std::move(labels));
  }

  int size() const { return n_; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }

  bool is_chain() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (!leq(a, b) && !leq(b, a)) return false;
    return true;
  }

  /// Labels are presentation-only; empty when the algebra is unlabeled.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Effective display name of an element (label if present, else index).
  std::string label(int a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  Table meet_table() const { return unflatten(meet_, n_); }

  bool same_table(const FiniteSemilattice& other) const {
    return n_ == other.n_ && top_ == other.top_ && meet_ == other.meet_;
  }

  static Table unflatten(const std::vector<int>& flat, int n) {
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = flat[static_cast<std::size_t>(a) * n + b];
    return t;
  }

private:
  FiniteSemilattice(int n, std::vector<int> meet, int top, int bottom,
                    std::vector<std::string> labels)
      : n_(n), top_(top), bottom_(bottom), meet_(std::move(meet)),
        labels_(std::move(labels)) {}

  int n_;
  int top_;
  int bottom_;
  std::vector<int> meet_;
  std::vector<std::string> labels_;

  friend class HemiAlgebra;
};

/// Order predicate a <= b in the semilattice order.
inline bool leq(const FiniteSemilattice& s, int a, int b) { return s.leq(a, b); }

/** Hemiimplicative semilattice: a bounded semilattice with an implication
    table satisfying a -> a = top and a /\ (a -> b) <= b. Validation also
    checks the quantified form of the second law (a <= b -> c implies
    a /\ b <= c) and insists the two agree, since they are equivalent. */
class HemiAlgebra {
public:
  static HemiAlgebra validate(FiniteSemilattice base, Table imp) {
    const int n = base.size();
    if (static_cast<int>(imp.size()) != n)
      throw UsageError("imp: table is not size x size");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : imp) {
      if (static_cast<int>(row.size()) != n)
        throw UsageError("imp: table is not size x size");
      for (int v : row) {
        if (v < 0 || v >= n) throw UsageError("imp: entry out of range");
        flat.push_back(v);
      }
    }
    auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };

    for (int a = 0; a < n; ++a)
      if (at(a, a) != base.top()) throw ValidationError("H2Violation", {a});

    std::optional<std::pair<int, int>> pointwise_fail;
    for (int a = 0; a < n && !pointwise_fail; ++a)
      for (int b = 0; b < n; ++b)
        if (!base.leq(base.meet(a, at(a, b)), b)) {
          pointwise_fail = {a, b};
          break;
        }

    // Same pass, quantified form: a <= b -> c implies a /\ b <= c.
    bool quantified_holds = true;
    for (int a = 0; a < n && quantified_holds; ++a)
      for (int b = 0; b < n && quantified_holds; ++b)
        for (int c = 0; c < n; ++c)
          if (base.leq(a, at(b, c)) && !base.leq(base.meet(a, b), c)) {
            quantified_holds = false;
            break;
          }
    if (quantified_holds == pointwise_fail.has_value())
      throw std::logic_error("equivalent forms of the implication law disagree");
    if (pointwise_fail)
      throw ValidationError("H3Violation", {pointwise_fail->first, pointwise_fail->second});

    return HemiAlgebra(std::move(base), std::move(flat));
  }

  const FiniteSemilattice& base() const { return base_; }
  int size() const { return base_.size(); }
  int top() const { return base_.top(); }
  int bottom() const { return base_.bottom(); }
  int meet(int a, int b) const { return base_.meet(a, b); }
  bool leq(int a, int b) const { return base_.leq(a, b); }
  int imp(int a, int b) const { return imp_[static_cast<std::size_t>(a) * base_.size() + b]; }

  /// a <-> b := (a -> b) /\ (b -> a)
  int rla(int a, int b) const { return meet(imp(a, b), imp(b, a)); }

  Table imp_table() const { return FiniteSemilattice::unflatten(imp_, base_.size()); }

  bool same_table(const HemiAlgebra& other) const {
    return base_.same_table(other.base_) && imp_ == other.imp_;
  }

private:
  HemiAlgebra(FiniteSemilattice base, std::vector<int> imp)
      : base_(std::move(base)), imp_(std::move(imp)) {}

  FiniteSemilattice base_;
  std::vector<int> imp_;
};

inline int rla(const HemiAlgebra& a, int x, int y) { return a.rla(x, y); }

}  // namespace hemilat

#endif  // HEMILAT_ALGEBRA_HPP
