#include "dickson4/permutation.hpp"

#include <algorithm>

#include "dickson4/errors.hpp"

namespace dickson4 {

namespace {

// Largest even n for which pp_scan still tabulates f_n (n/2 + 1 coefficients).
const BigInt kAuxScanLimit = BigInt(1) << 24;

bool all_distinct(const FieldCtx& field, std::span<const FqElem> values) {
  std::vector<std::uint64_t> idx;
  idx.reserve(values.size());
  for (const auto& v : values) idx.push_back(field.index_of(v));
  std::sort(idx.begin(), idx.end());
  return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
}

void check_length(const FieldCtx& field, std::span<const FqElem> values) {
  if (values.size() != field.order())
    throw LengthMismatch("expected " + std::to_string(field.order()) + " values, got " + std::to_string(values.size()));
}

std::vector<FqElem> eval_residue_poly_table(const FieldCtx& f, std::span<const std::uint64_t> coeffs,
                                            const std::vector<FqElem>& points) {
  std::vector<FqElem> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    auto acc = f.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = f.add(f.mul(acc, x), f.from_int(static_cast<std::int64_t>(*it)));
    out.push_back(acc);
  }
  return out;
}

/// f_n(1 - 4x) at every x, from residues.
std::vector<FqElem> aux_table(const FieldCtx& f, std::span<const std::uint64_t> coeffs) {
  std::vector<FqElem> points;
  points.reserve(f.order());
  const auto four = f.from_int(4);
  for (const auto& x : f.elements()) points.push_back(f.sub(f.one(), f.mul(four, x)));
  return eval_residue_poly_table(f, coeffs, points);
}

AuxEquivalence aux_from_table(const FieldCtx& f, const BigInt& n, const std::vector<FqElem>& d_values) {
  const auto coeffs = aux_poly_residues(n, f.p());
  const auto lhs_scale = f.pow(f.from_int(2), n);
  AuxEquivalence out;
  const auto shifted = aux_table(f, coeffs);
  out.identity_holds = true;
  for (std::size_t i = 0; i < d_values.size(); ++i)
    if (f.mul(lhs_scale, d_values[i]) != shifted[i]) out.identity_holds = false;

  // PP verdict of f_n itself, over x in enumeration order
  out.f_n_is_pp = all_distinct(f, eval_residue_poly_table(f, coeffs, f.elements()));
  out.d_is_pp = all_distinct(f, d_values);
  return out;
}

/// Fiber structure of f on the given domain.
TwoToOneResult analyze_fibers(const QuadExtCtx& ext, const std::vector<QuadElem>& domain, const BigInt& n) {
  const auto& f = ext.base();
  std::vector<std::uint64_t> idx;
  idx.reserve(domain.size());
  for (const auto& y : domain) idx.push_back(f.index_of(ext.project(rdp4_closed_form_at(ext, n, y))));
  std::sort(idx.begin(), idx.end());

  TwoToOneResult out;
  out.all_fibers_two = true;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && idx[j] == idx[i]) ++j;
    if (j - i != 2) out.all_fibers_two = false;
    out.image.push_back(f.element(idx[i]));
    i = j;
  }
  out.hits_special_value = std::binary_search(idx.begin(), idx.end(), f.index_of(quarter_point_value(f, n)));
  out.verdict = out.all_fibers_two && !out.hits_special_value;
  return out;
}

PPReport build_report(const QuadExtCtx& ext, const std::vector<QuadElem>& domain, const BigInt& n,
                      std::vector<FqElem> values) {
  const auto& f = ext.base();
  PPReport r;
  r.q = f.order();
  r.n = n;
  r.direct = all_distinct(f, values);
  r.hermite = hermite_check(f, values);
  r.mod6_necessary = necessary_mod6(n);

  if (n == 0) {
    r.two_to_one = r.direct;
  } else {
    r.two_to_one = analyze_fibers(ext, domain, n).verdict;
  }

  if (!boost::multiprecision::bit_test(n, 0) && n <= kAuxScanLimit) {
    const auto aux = aux_from_table(f, n, values);
    if (!aux.identity_holds) throw CriterionDisagreement(r.q, n, "aux_identity", true, false);
    r.aux_equiv = aux.f_n_is_pp;
  }
  r.value_table = std::move(values);

  if (r.hermite != r.direct) throw CriterionDisagreement(r.q, n, "hermite", r.direct, r.hermite);
  if (r.two_to_one != r.direct) throw CriterionDisagreement(r.q, n, "two_to_one", r.direct, r.two_to_one);
  if (r.aux_equiv && *r.aux_equiv != r.direct) throw CriterionDisagreement(r.q, n, "aux_equiv", r.direct, *r.aux_equiv);
  if (r.direct && !r.mod6_necessary) throw CriterionDisagreement(r.q, n, "mod6", r.direct, r.mod6_necessary);
  return r;
}

}  // namespace

std::vector<FqElem> value_table(const FieldCtx& field, const BigInt& n) {
  std::vector<FqElem> out;
  out.reserve(field.order());
  for (const auto& x : field.elements()) out.push_back(rdp4_eval_recursive(field, n, x));
  return out;
}

bool is_pp_direct(const FieldCtx& field, std::span<const FqElem> values) {
  check_length(field, values);
  return all_distinct(field, values);
}

std::vector<FqElem> hermite_moments(const FieldCtx& field, std::span<const FqElem> values) {
  check_length(field, values);
  const auto& f = field;
  const auto q = f.order();
  std::vector<FqElem> moments(q, f.zero());
  for (const auto& v : values) {
    auto power = f.one();
    for (std::uint64_t i = 0; i < q; ++i) {
      moments[i] = f.add(moments[i], power);
      power = f.mul(power, v);
    }
  }
  return moments;
}

bool hermite_check(const FieldCtx& field, std::span<const FqElem> values) {
  const auto moments = hermite_moments(field, values);
  const auto q = field.order();
  for (std::uint64_t i = 0; i + 1 < q; ++i)
    if (!moments[i].is_zero()) return false;
  return moments[q - 1] == field.from_int(-1);
}

bool necessary_mod6(const BigInt& n) { return mod_u64(n, 6) == 2; }

FixedPointValues fixed_point_tables(const BigInt& n) {
  static constexpr int at_one[6] = {-1, 1, 2, 1, -1, -2};
  return {at_one[mod_u64(n, 6)], mod_u64(n, 2) == 1 ? 1 : -1};
}

bool fixed_point_tables_agree(const FieldCtx& field, const BigInt& n) {
  const auto t = fixed_point_tables(n);
  return rdp4_eval_recursive(field, n, field.one()) == field.from_int(t.at_one) &&
         rdp4_eval_recursive(field, n, field.from_int(-2)) == field.from_int(t.at_minus_two);
}

std::vector<QuadElem> two_to_one_domain(const QuadExtCtx& ext) {
  const auto& f = ext.base();
  const auto half = ext.embed(f.half());
  std::vector<QuadElem> out;
  for (const auto& x : f.elements()) {
    const auto z = ext.embed(x);
    if (z != half) out.push_back(z);
  }
  for (const auto& z : ext.build_V())
    if (z != half) out.push_back(z);
  std::sort(out.begin(), out.end(),
            [&ext](const QuadElem& a, const QuadElem& b) { return ext.index_of(a) < ext.index_of(b); });
  return out;
}

TwoToOneResult two_to_one_characterization(const QuadExtCtx& ext, const BigInt& n) {
  if (n < 1) throw UsageError("the two-to-one characterization needs n >= 1");
  return analyze_fibers(ext, two_to_one_domain(ext), n);
}

AuxPoly aux_poly(const BigInt& n, unsigned n_max) {
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (boost::multiprecision::bit_test(n, 0)) throw OddDegree("f_n is defined for even n only, got " + n.str());
  if (n > n_max) throw DegreeTooLarge("exact coefficients are capped at n <= " + std::to_string(n_max) + ", got " + n.str());
  const auto nn = static_cast<std::int64_t>(n);
  AuxPoly out{n, {}};
  for (std::int64_t j = 0; j < nn / 2; ++j) out.coeffs.push_back(3 * binomial(nn, 2 * j + 1) - binomial(nn, 2 * j));
  out.coeffs.push_back(-1);
  return out;
}

std::vector<std::uint64_t> aux_poly_residues(const BigInt& n, std::uint64_t p) {
  if (n < 0) throw UsageError("degree must be nonnegative");
  if (boost::multiprecision::bit_test(n, 0)) throw OddDegree("f_n is defined for even n only, got " + n.str());
  if (n > kAuxScanLimit) throw DegreeTooLarge("f_n residues are capped at n <= " + kAuxScanLimit.str());
  const auto nn = static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> out;
  out.reserve(nn / 2 + 1);
  for (std::uint64_t j = 0; j < nn / 2; ++j) {
    const auto a = binomial_mod_p(nn, 2 * j + 1, p);
    const auto b = binomial_mod_p(nn, 2 * j, p);
    out.push_back((3 * a + p - b) % p);
  }
  out.push_back(p - 1);
  return out;
}

AuxEquivalence aux_identity_and_equiv(const FieldCtx& field, const BigInt& n) {
  if (boost::multiprecision::bit_test(n, 0)) throw OddDegree("f_n is defined for even n only, got " + n.str());
  return aux_from_table(field, n, value_table(field, n));
}

PPReport pp_report(const QuadExtCtx& ext, const BigInt& n) {
  return build_report(ext, two_to_one_domain(ext), n, value_table(ext.base(), n));
}

std::vector<PPReport> pp_scan(const QuadExtCtx& ext, const BigInt& n_lo, const BigInt& n_hi) {
  if (n_lo < 0 || n_hi < n_lo) throw UsageError("scan range must satisfy 0 <= n_lo <= n_hi");
  const auto& f = ext.base();
  const auto domain = two_to_one_domain(ext);
  const auto xs = f.elements();

  // roll D_{n-1}, D_n forward across the range instead of re-running the recurrence
  auto cur = value_table(f, n_lo);
  std::vector<FqElem> prev;
  if (n_lo >= 1) prev = value_table(f, n_lo - 1);

  std::vector<PPReport> out;
  for (BigInt n = n_lo; n <= n_hi; ++n) {
    std::vector<FqElem> next;
    if (n < n_hi) {
      if (n == 0) {
        next.assign(xs.size(), f.one());
      } else {
        next.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) next.push_back(f.sub(cur[i], f.mul(xs[i], prev[i])));
      }
    }
    out.push_back(build_report(ext, domain, n, cur));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace dickson4
