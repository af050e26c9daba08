#include "dickson4/dickson.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "dickson4/errors.hpp"

namespace dickson4 {

namespace {

// Beyond this many steps the recurrence is advanced by matrix squaring.
constexpr std::uint64_t kLinearStepLimit = std::uint64_t{1} << 20;

using Mat2 = std::array<FqElem, 4>;  // row-major

Mat2 mat_mul(const FieldCtx& f, const Mat2& a, const Mat2& b) {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

void check_kind(int kind, int hi) {
  if (kind < 0 || kind > hi) throw KindOutOfRange("kind index must lie in [0, " + std::to_string(hi) + "], got " + std::to_string(kind));
}

/// 2^{-n} in F_p; 2 lies in F_p so the exponent folds mod p - 1.
FqElem inverse_power_of_two(const FieldCtx& f, const BigInt& n) {
  return f.pow(f.half(), mod_u64(n, f.p() - 1));
}

}  // namespace

std::vector<BigInt> rdp_coeffs_exact(const BigInt& n, int kind, unsigned n_max) {
  check_kind(kind, 3);
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (n > n_max) throw DegreeTooLarge("exact coefficients are capped at n <= " + std::to_string(n_max) + ", got " + n.str());
  const auto nn = static_cast<std::int64_t>(n);
  if (nn == 0) return {BigInt(2 - kind)};
  std::vector<BigInt> out;
  out.reserve(nn / 2 + 1);
  for (std::int64_t i = 0; i <= nn / 2; ++i) {
    BigInt c = binomial(nn - i, i) - BigInt(kind - 1) * binomial(nn - 1 - i, i - 1);
    out.push_back(i % 2 ? BigInt(-c) : c);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

FqElem eval_integer_poly(const FieldCtx& field, std::span<const BigInt> coeffs, const FqElem& x) {
  auto acc = field.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), field.from_bigint(*it));
  return acc;
}

FqElem rdp4_eval_recursive(const FieldCtx& field, const BigInt& n, const FqElem& x) {
  const auto& f = field;
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (n == 0) return f.from_int(-1);

  BigInt steps = n;
  const auto period = BigInt(f.order()) * f.order() - 1;
  if (x != f.quarter() && steps >= period) steps = (steps - 1) % period + 1;

  if (steps <= kLinearStepLimit) {
    auto prev = f.from_int(-1);
    auto cur = f.one();
    const auto m = static_cast<std::uint64_t>(steps);
    for (std::uint64_t i = 2; i <= m; ++i) {
      auto next = f.sub(cur, f.mul(x, prev));
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // [D_k, D_{k-1}]^T = M^{k-1} [D_1, D_0]^T with M = [[1, -x], [1, 0]]
  Mat2 result{f.one(), f.zero(), f.zero(), f.one()};
  Mat2 base{f.one(), f.neg(x), f.one(), f.zero()};
  BigInt e = steps - 1;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = mat_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(f, base, base);
  }
  return f.sub(result[0], result[1]);  // D_1 = 1, D_0 = -1
}

FqElem quarter_point_value(const FieldCtx& field, const BigInt& n) {
  return field.mul(field.from_bigint(3 * n - 1), inverse_power_of_two(field, n));
}

QuadElem rdp4_closed_form_at(const QuadExtCtx& ext, const BigInt& n, const QuadElem& y) {
  const auto& f = ext.base();
  const auto two = ext.embed(f.from_int(2));
  const auto one = ext.one();
  const auto one_minus_y = ext.sub(one, y);
  const auto denom = ext.sub(ext.add(y, y), one);
  if (denom == ext.zero()) throw std::domain_error("closed form is undefined at y = 1/2");
  const auto lhs = ext.mul(ext.sub(two, y), ext.pow(y, n));
  const auto rhs = ext.mul(ext.add(y, one), ext.pow(one_minus_y, n));
  return ext.div(ext.sub(lhs, rhs), denom);
}

FqElem rdp4_eval_closed(const QuadExtCtx& ext, const BigInt& n, const FqElem& x) {
  const auto& f = ext.base();
  if (x == f.quarter()) return quarter_point_value(f, n);
  return ext.project(rdp4_closed_form_at(ext, n, ext.parametrize_y(x)));
}

FqElem rdp4_eval_closed_swapped(const QuadExtCtx& ext, const BigInt& n, const FqElem& x) {
  const auto& f = ext.base();
  if (x == f.quarter()) return quarter_point_value(f, n);
  return ext.project(rdp4_closed_form_at(ext, n, ext.sub(ext.one(), ext.parametrize_y(x))));
}

FqElem rdp_eval_param(const FieldCtx& field, const BigInt& n, const FqElem& a, const FqElem& x) {
  const auto& f = field;
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (!a.is_zero()) return f.mul(f.pow(a, n), rdp4_eval_recursive(f, n, f.div(x, f.mul(a, a))));
  if (boost::multiprecision::bit_test(n, 0)) return f.zero();
  const BigInt half = n / 2;
  // (-1)^{n/2 + 1} x^{n/2}
  const auto sign = boost::multiprecision::bit_test(half, 0) ? f.one() : f.from_int(-1);
  return f.mul(sign, f.pow(x, half));
}

std::vector<FqElem> series_divide(const FieldCtx& field, std::span<const FqElem> num, std::span<const FqElem> den,
                                  std::size_t n_max) {
  const auto& f = field;
  if (den.empty() || den[0].is_zero()) throw std::domain_error("series denominator must have an invertible constant term");
  const auto lead_inv = f.inv(den[0]);
  std::vector<FqElem> out;
  out.reserve(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    auto acc = k < num.size() ? num[k] : f.zero();
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) acc = f.sub(acc, f.mul(den[j], out[k - j]));
    out.push_back(f.mul(acc, lead_inv));
  }
  return out;
}

std::vector<FqElem> genfun_series(const FieldCtx& field, const FqElem& x, std::size_t n_max) {
  const std::array num{field.from_int(-1), field.from_int(2)};
  const std::array den{field.one(), field.from_int(-1), x};
  return series_divide(field, num, den, n_max);
}

FrobeniusPowerIdentity frobenius_power_identity(const FieldCtx& field, unsigned k) {
  const auto& f = field;
  if (k < 1 || k > f.degree())
    throw UsageError("k must lie in [1, e] = [1, " + std::to_string(f.degree()) + "]");
  FrobeniusPowerIdentity out;
  out.k = k;
  out.n = boost::multiprecision::pow(BigInt(f.p()), k);
  const auto two_pow = f.pow(f.from_int(2), out.n);
  const BigInt half_exp = (out.n - 1) / 2;
  const auto three = f.from_int(3);
  const auto four = f.from_int(4);

  std::vector<std::uint64_t> hits;
  for (const auto& x : f.elements()) {
    const auto d = rdp4_eval_recursive(f, out.n, x);
    hits.push_back(f.index_of(d));
    out.lhs.push_back(f.add(f.mul(two_pow, d), f.one()));
    out.rhs.push_back(f.mul(three, f.pow(f.sub(f.one(), f.mul(four, x)), half_exp)));
  }
  out.holds = out.lhs == out.rhs;
  std::sort(hits.begin(), hits.end());
  out.map_is_bijection = std::adjacent_find(hits.begin(), hits.end()) == hits.end();
  return out;
}

FqElem classical_eval(const QuadExtCtx& ext, const BigInt& n, int kind, const FqElem& x) {
  check_kind(kind, 2);
  const auto& f = ext.base();
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (x == f.quarter()) {
    // limits at y = 1/2: D_n = 2/2^n, E_n = (n+1)/2^n, D_{n,2} = E_{n-1} = 2n/2^n
    const BigInt numer = kind == 0 ? BigInt(2) : kind == 1 ? BigInt(n + 1) : BigInt(2 * n);
    return f.mul(f.from_bigint(numer), inverse_power_of_two(f, n));
  }
  const auto y = ext.parametrize_y(x);
  const auto one_minus_y = ext.sub(ext.one(), y);
  if (kind == 0) return ext.project(ext.add(ext.pow(y, n), ext.pow(one_minus_y, n)));
  const BigInt m = kind == 1 ? BigInt(n + 1) : n;
  const auto denom = ext.sub(ext.add(y, y), ext.one());
  return ext.project(ext.div(ext.sub(ext.pow(y, m), ext.pow(one_minus_y, m)), denom));
}

}  // namespace dickson4
