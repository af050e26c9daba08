#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dickson4/bigint.hpp"
#include "dickson4/field.hpp"
#include "dickson4/quad_ext.hpp"

namespace dickson4 {

/// Default cap on n for the exact big-integer coefficient path.
inline constexpr unsigned kDefaultExactDegreeLimit = 512;

/// Kind index k of D_{n,k}: 0 first, 1 second, 2 third, 3 fourth kind.
inline constexpr int kFourthKind = 3;

/// Exact integer coefficients of the reversed Dickson polynomial
/// D_{n,k}(1, x) in x, constant term first. The i-th coefficient is
/// (-1)^i (C(n-i, i) - (k-1) C(n-1-i, i-1)); D_{0,k} = 2 - k.
///
/// Throws KindOutOfRange unless 0 <= kind <= 3, DegreeTooLarge if n > n_max.
std::vector<BigInt> rdp_coeffs_exact(const BigInt& n, int kind, unsigned n_max = kDefaultExactDegreeLimit);

/// Horner evaluation of an integer polynomial after reduction mod p.
FqElem eval_integer_poly(const FieldCtx& field, std::span<const BigInt> coeffs, const FqElem& x);

/// D_{n,3}(1, x) from D_n = D_{n-1} - x D_{n-2}, D_0 = -1, D_1 = 1.
///
/// For x != 1/4, n is first folded into [1, q^2 - 1] (the sequence has
/// period q^2 - 1 there). Very large n that survive the fold are advanced by
/// squaring the companion matrix of the same recurrence.
FqElem rdp4_eval_recursive(const FieldCtx& field, const BigInt& n, const FqElem& x);

/// (3n - 1) / 2^n in F_p, the value of D_{n,3}(1, 1/4).
FqElem quarter_point_value(const FieldCtx& field, const BigInt& n);

/// ((2 - y) y^n - (y + 1)(1 - y)^n) / (2y - 1) in F_{q^2}; y != 1/2.
QuadElem rdp4_closed_form_at(const QuadExtCtx& ext, const BigInt& n, const QuadElem& y);

/// D_{n,3}(1, x) through the y-parametrisation x = y(1 - y). Throws
/// InternalInconsistency if the result leaves F_q.
FqElem rdp4_eval_closed(const QuadExtCtx& ext, const BigInt& n, const FqElem& x);

/// Same as rdp4_eval_closed but on the other branch 1 - y.
FqElem rdp4_eval_closed_swapped(const QuadExtCtx& ext, const BigInt& n, const FqElem& x);

/// D_{n,3}(a, x) = a^n D_{n,3}(1, x / a^2) for a != 0; the degenerate a = 0
/// family otherwise.
FqElem rdp_eval_param(const FieldCtx& field, const BigInt& n, const FqElem& a, const FqElem& x);

/// Truncated quotient num / den of power series (den[0] must be invertible),
/// coefficients 0..n_max.
std::vector<FqElem> series_divide(const FieldCtx& field, std::span<const FqElem> num, std::span<const FqElem> den,
                                  std::size_t n_max);

/// Coefficients t^0..t^n_max of (2t - 1) / (1 - t + x t^2).
std::vector<FqElem> genfun_series(const FieldCtx& field, const FqElem& x, std::size_t n_max);

struct FrobeniusPowerIdentity {
  unsigned k = 0;
  BigInt n;                  // p^k
  std::vector<FqElem> lhs;   // 2^n D_{n,3}(1, x) + 1, one entry per x
  std::vector<FqElem> rhs;   // 3 (1 - 4x)^{(n-1)/2}
  bool holds = false;        // lhs == rhs pointwise
  bool map_is_bijection = false;  // x -> D_{n,3}(1, x) on F_q
};

/// Tabulates both sides of the identity at n = p^k over all of F_q.
/// Requires 1 <= k <= e.
FrobeniusPowerIdentity frobenius_power_identity(const FieldCtx& field, unsigned k);

/// Classical reversed Dickson values through y: kind 0 gives D_n(1, x),
/// kind 1 E_n(1, x), kind 2 the third kind D_{n,2}(1, x) = E_{n-1}(1, x).
FqElem classical_eval(const QuadExtCtx& ext, const BigInt& n, int kind, const FqElem& x);

}  // namespace dickson4
