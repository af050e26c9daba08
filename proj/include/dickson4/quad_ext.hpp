#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dickson4/field.hpp"

namespace dickson4 {

/// re + im*u in F_q[u]/(u^2 - nu).
struct QuadElem {
  FqElem re;
  FqElem im;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

/// F_{q^2} modelled as F_q[u]/(u^2 - nu) with nu a non-square of F_q.
/// Holds its own copy of the base context; immutable after construction.
class QuadExtCtx {
 public:
  /// nu = first non-square of the base in enumeration order.
  explicit QuadExtCtx(FieldCtx base);
  /// Alternative model; throws InvalidModulus if nu is a square.
  QuadExtCtx(FieldCtx base, const FqElem& nu);

  const FieldCtx& base() const { return base_; }
  const FqElem& nonsquare() const { return nu_; }
  std::uint64_t order() const { return base_.order() * base_.order(); }

  QuadElem embed(const FqElem& x) const { return {x, base_.zero()}; }
  bool is_embedded(const QuadElem& z) const { return z.im.is_zero(); }
  /// Inverse of embed(); throws InternalInconsistency when z is not in F_q.
  FqElem project(const QuadElem& z) const;

  QuadElem zero() const { return embed(base_.zero()); }
  QuadElem one() const { return embed(base_.one()); }
  QuadElem u() const { return {base_.zero(), base_.one()}; }

  QuadElem add(const QuadElem& a, const QuadElem& b) const;
  QuadElem sub(const QuadElem& a, const QuadElem& b) const;
  QuadElem neg(const QuadElem& a) const;
  QuadElem mul(const QuadElem& a, const QuadElem& b) const;
  QuadElem inv(const QuadElem& a) const;
  QuadElem div(const QuadElem& a, const QuadElem& b) const { return mul(a, inv(b)); }
  QuadElem pow(const QuadElem& a, const BigInt& m) const;
  QuadElem pow(const QuadElem& a, std::uint64_t m) const;

  /// z^q by square-and-multiply.
  QuadElem frobenius(const QuadElem& z) const;
  /// re - im*u; coincides with frobenius() in this model.
  QuadElem conjugate(const QuadElem& z) const { return {z.re, base_.neg(z.im)}; }

  /// Index re + q*im; enumeration order of F_{q^2}.
  std::uint64_t index_of(const QuadElem& z) const;
  QuadElem element(std::uint64_t index) const;
  std::vector<QuadElem> elements() const;

  /// A square root in F_{q^2} of an element of F_q (always exists). The base
  /// field's canonical root when it has one, otherwise w*u with w the
  /// canonical root of x/nu.
  QuadElem sqrt_of_base(const FqElem& x) const;

  /// y with y(1 - y) = x, y = (1 + sqrt(1 - 4x)) / 2.
  QuadElem parametrize_y(const FqElem& x) const;

  /// V = { z : z^q = 1 - z }, by solving the F_p-linear system
  /// (Frob + I) z = 1 on coefficient vectors. Sorted by index.
  std::vector<QuadElem> build_V() const;
  /// Same set by filtering all q^2 elements; a cross-check for small q.
  std::vector<QuadElem> build_V_by_filter() const;

 private:
  FieldCtx base_;
  FqElem nu_;
};

}  // namespace dickson4
