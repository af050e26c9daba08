#include "dickson4/moments.hpp"

#include "dickson4/bigint.hpp"
#include "dickson4/errors.hpp"

namespace dickson4 {

namespace {

/// t^q - t^{q-1} - 1
FpPoly shift_factor(const Zp& f, std::uint64_t q) {
  std::vector<std::uint64_t> c(q + 1, 0);
  c[0] = f.neg(1);
  c[q - 1] = f.neg(1);
  c[q] = 1;
  return FpPoly(std::move(c));
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::corrected ? "corrected" : "as-printed"; }

Convention parse_convention(std::string_view text) {
  if (text == "corrected") return Convention::corrected;
  if (text == "as-printed" || text == "as_printed") return Convention::as_printed;
  throw UsageError("unknown convention '" + std::string(text) + "' (expected corrected or as-printed)");
}

std::vector<FqElem> power_sums(const FieldCtx& field) {
  const auto q = field.order();
  std::vector<FqElem> sums(q, field.zero());
  for (const auto& u : field.elements()) {
    auto power = field.one();
    for (std::uint64_t k = 0; k < q; ++k) {
      sums[k] = field.add(sums[k], power);
      power = field.mul(power, u);
    }
  }
  return sums;
}

std::vector<std::uint64_t> b_coefficients_expanded(const FieldCtx& field) {
  const Zp f{field.p()};
  const auto q = field.order();
  auto base = poly_sub(f, FpPoly::monomial(1, 1), FpPoly::monomial(1, q));
  auto b = poly_sub(f, FpPoly({f.neg(1)}), poly_pow(f, base, q - 1));
  std::vector<std::uint64_t> out(q * q - q + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[i];
  return out;
}

std::vector<std::uint64_t> b_coefficients(const FieldCtx& field) {
  const Zp f{field.p()};
  const auto q = field.order();
  std::vector<std::uint64_t> out(q * q - q + 1, 0);
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    const auto alpha = i % q;
    const auto beta = i / q;
    if (alpha + beta == q - 1) {
      const auto binom = binomial_mod_p(q - 1, beta, f.p);
      out[i] = beta % 2 == 1 ? binom : f.neg(binom);  // (-1)^{beta+1}
    } else if (alpha == 0 && beta == 0) {
      out[i] = f.neg(1);
    }
  }
  if (out != b_coefficients_expanded(field))
    throw InternalInconsistency("digit formula for b_i disagrees with the direct expansion");
  return out;
}

std::vector<std::uint64_t> c_coefficients(const FieldCtx& field, Convention convention) {
  const Zp f{field.p()};
  const auto q = field.order();

  const FpPoly g = convention == Convention::as_printed ? FpPoly({f.neg(2), 3}) : FpPoly({0, 1});
  const FpPoly geometric(std::vector<std::uint64_t>(q * q - 1, 1));
  const auto first = poly_mul(f, poly_mul(f, shift_factor(f, q), g), geometric);

  // t^{2(q-1)} + sum_k (t-1)^{q-1-k} t^{2k} 4^{-k}
  auto inner = FpPoly::monomial(1, 2 * (q - 1));
  const auto quarter = f.inv(4);
  const FpPoly t_minus_one({f.neg(1), 1});
  for (std::uint64_t k = 1; k <= q - 1; ++k) {
    auto term = poly_mul(f, poly_pow(f, t_minus_one, q - 1 - k), FpPoly::monomial(f.pow(quarter, k), 2 * k));
    inner = poly_add(f, inner, term);
  }
  const FpPoly b(b_coefficients(field));
  const auto second = poly_mul(f, poly_mul(f, FpPoly({f.neg(1), 2}), inner), b);

  const auto rhs = poly_sub(f, poly_sub(f, FpPoly{}, first), second);
  if (rhs.degree() > static_cast<long>(q * q + q - 1))
    throw InternalInconsistency("right-hand side exceeds degree q^2 + q - 1");
  std::vector<std::uint64_t> out(q * q + q, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rhs[i];
  return out;
}

MomentTable moment_table(const FieldCtx& field, Convention convention) {
  const Zp f{field.p()};
  const auto q = field.order();
  const auto top = q * q - 1;

  MomentTable t;
  t.q = q;
  t.p = f.p;
  t.convention = convention;
  t.b = b_coefficients(field);
  t.c = c_coefficients(field, convention);
  t.d.assign(top + 1, 0);

  const auto& c = t.c;
  std::vector<int> writes(top + 1, 0);
  auto get = [&](std::uint64_t n) {
    if (n < 1 || n > top || writes[n] == 0)
      throw IndexCoverageError("d_" + std::to_string(n) + " read before it was assigned");
    return t.d[n];
  };
  auto set = [&](std::uint64_t n, std::uint64_t v) {
    if (n < 1 || n > top) throw IndexCoverageError("d_" + std::to_string(n) + " is outside [1, q^2 - 1]");
    ++writes[n];
    t.d[n] = v;
  };

  for (std::uint64_t j = 1; j <= q - 1; ++j) set(j, f.neg(c[j]));
  set(q, f.sub(c[1], c[q]));
  for (std::uint64_t l = 1; l <= q - 2; ++l) {
    if (l >= 2) set(l * q, f.sub(f.sub(get((l - 1) * q), get((l - 1) * q + 1)), c[l * q]));
    for (std::uint64_t j = 1; j <= q - 1; ++j)
      set(l * q + j, f.sub(f.sub(get((l - 1) * q + j), get((l - 1) * q + j + 1)), c[l * q + j]));
  }
  for (std::uint64_t j = 0; j <= q - 1; ++j) {
    std::uint64_t s = 0;
    for (std::uint64_t i = j; i <= q - 1; ++i) s = f.add(s, c[q * q + i]);
    set(q * q - q + j, s);
  }
  for (std::uint64_t n = 1; n <= top; ++n)
    if (writes[n] != 1)
      throw IndexCoverageError("d_" + std::to_string(n) + " assigned " + std::to_string(writes[n]) + " times");

  const auto half = f.inv(2);
  t.a.assign(top + 1, 0);
  for (std::uint64_t n = 1; n <= top; ++n) {
    const auto special = f.mul(f.reduce(static_cast<std::int64_t>((3 * n - 1) % f.p)), f.pow(half, n % (f.p - 1)));
    t.a[n] = f.add(t.d[n], special);
  }
  return t;
}

std::vector<FqElem> first_moments_bruteforce(const FieldCtx& field, std::uint64_t n_max) {
  std::vector<FqElem> sums(n_max + 1, field.zero());
  for (const auto& x : field.elements()) {
    auto prev = field.from_int(-1);
    auto cur = field.one();
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (n >= 2) {
        auto next = field.sub(cur, field.mul(x, prev));
        prev = cur;
        cur = next;
      }
      sums[n] = field.add(sums[n], cur);
    }
  }
  return sums;
}

FqElem first_moment_bruteforce(const FieldCtx& field, std::uint64_t n) {
  if (n < 1) throw UsageError("first moments are indexed from n = 1");
  return first_moments_bruteforce(field, n)[n];
}

std::vector<MomentDivergence> verify_moments(const FieldCtx& field, Convention convention) {
  const auto table = moment_table(field, convention);
  const auto top = table.q * table.q - 1;
  const auto oracle = first_moments_bruteforce(field, top);
  std::vector<MomentDivergence> out;
  for (std::uint64_t n = 1; n <= top; ++n) {
    if (oracle[n] != field.from_int(static_cast<std::int64_t>(table.a[n]))) out.push_back({n, table.a[n], oracle[n]});
  }
  return out;
}

FpPoly moment_identity_lhs(const FieldCtx& field, const std::vector<std::uint64_t>& d) {
  const Zp f{field.p()};
  std::vector<std::uint64_t> series(d.begin(), d.end());
  if (!series.empty()) series[0] = 0;
  return poly_mul(f, shift_factor(f, field.order()), FpPoly(std::move(series)));
}

}  // namespace dickson4
