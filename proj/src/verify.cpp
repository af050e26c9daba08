#include "dickson4/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "dickson4/dickson.hpp"
#include "dickson4/errors.hpp"
#include "dickson4/moments.hpp"
#include "dickson4/permutation.hpp"
#include "dickson4/quad_ext.hpp"

namespace dickson4 {

namespace {

using Check = std::function<std::optional<std::string>()>;

std::string at(const FieldCtx& f, const FqElem& x) { return "x=" + f.format(x); }

}  // namespace

std::vector<PropertyResult> run_verification(const FieldCtx& field, const VerifyOptions& options) {
  const auto& f = field;
  const QuadExtCtx ext(field);
  const auto q = f.order();
  const auto xs = f.elements();
  const auto quarter = f.quarter();
  const std::uint64_t period = q * q - 1;
  const auto scan_max = options.scan_max == 0 ? period : std::min(options.scan_max, period);
  const auto exact_max = std::min<std::uint64_t>(options.n_max, kDefaultExactDegreeLimit);

  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("field.axioms", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      const auto a = f.element(pick(rng));
      const auto b = f.element(pick(rng));
      const auto c = f.element(pick(rng));
      if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return "associativity fails";
      if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return "distributivity fails";
      if (!a.is_zero() && f.mul(a, f.inv(a)) != f.one()) return "inverse fails at " + at(f, a);
    }
    return std::nullopt;
  });

  checks.emplace_back("field.frobenius_fixes_Fq", [&]() -> std::optional<std::string> {
    for (const auto& x : xs)
      if (f.pow(x, q) != x) return "x^q != x at " + at(f, x);
    return std::nullopt;
  });

  checks.emplace_back("field.deterministic_modulus", [&]() -> std::optional<std::string> {
    if (FieldCtx::construct(f.p(), f.degree()).describe() != FieldCtx::construct(f.p(), f.degree()).describe())
      return "construct_field is not deterministic";
    return std::nullopt;
  });

  checks.emplace_back("field.sqrt", [&]() -> std::optional<std::string> {
    for (const auto& x : xs) {
      const auto r = f.sqrt_opt(x);
      if (r.has_value() != f.is_square(x)) return "sqrt existence wrong at " + at(f, x);
      if (r && f.mul(*r, *r) != x) return "sqrt wrong at " + at(f, x);
    }
    return std::nullopt;
  });

  checks.emplace_back("quad.frobenius_involution", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(options.seed + 1);
    std::uniform_int_distribution<std::uint64_t> pick(0, ext.order() - 1);
    for (std::uint64_t s = 0; s < std::min<std::uint64_t>(options.samples, 2000); ++s) {
      const auto z = ext.element(pick(rng));
      if (ext.frobenius(ext.frobenius(z)) != z) return "Frob^2 != id";
      if (ext.frobenius(z) != ext.conjugate(z)) return "Frob != conjugation";
    }
    for (const auto& x : xs)
      if (ext.frobenius(ext.embed(x)) != ext.embed(x)) return "Frob moves embedded " + at(f, x);
    return std::nullopt;
  });

  checks.emplace_back("quad.V_set", [&]() -> std::optional<std::string> {
    const auto v = ext.build_V();
    if (v.size() != q) return "|V| = " + std::to_string(v.size());
    const auto half = ext.embed(f.half());
    std::size_t in_base = 0;
    for (const auto& z : v) {
      if (ext.is_embedded(z)) {
        ++in_base;
        if (z != half) return "V meets F_q outside 1/2";
      }
      const auto w = ext.sub(ext.one(), z);
      if (!std::binary_search(v.begin(), v.end(), w, [&](const QuadElem& a, const QuadElem& b) {
            return ext.index_of(a) < ext.index_of(b);
          }))
        return "V not closed under z -> 1 - z";
    }
    if (in_base != 1) return "F_q and V do not meet exactly in 1/2";
    if (q <= 1000 && v != ext.build_V_by_filter()) return "linear solve and filter disagree";
    return std::nullopt;
  });

  checks.emplace_back("quad.parametrize_y", [&]() -> std::optional<std::string> {
    for (const auto& x : xs) {
      const auto y = ext.parametrize_y(x);
      if (ext.mul(y, ext.sub(ext.one(), y)) != ext.embed(x)) return "y(1-y) != x at " + at(f, x);
      const auto fy = ext.frobenius(y);
      if (fy != y && fy != ext.sub(ext.one(), y)) return "y outside F_q u V at " + at(f, x);
    }
    return std::nullopt;
  });

  if (q * q <= 20000) {
    checks.emplace_back("quad.z_one_minus_z_in_base", [&]() -> std::optional<std::string> {
      for (const auto& z : ext.elements()) {
        const bool in_base = ext.is_embedded(ext.mul(z, ext.sub(ext.one(), z)));
        const auto fz = ext.frobenius(z);
        if (in_base != (fz == z || fz == ext.sub(ext.one(), z))) return "characterisation fails";
      }
      return std::nullopt;
    });
  }

  checks.emplace_back("quad.second_model", [&]() -> std::optional<std::string> {
    // the last non-square in enumeration order gives a different model
    FqElem nu2 = ext.nonsquare();
    for (std::uint64_t i = q; i-- > 1;) {
      if (!f.is_square(f.element(i))) {
        nu2 = f.element(i);
        break;
      }
    }
    const QuadExtCtx other(field, nu2);
    for (const auto& x : xs)
      for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(options.n_max, 60); ++n)
        if (rdp4_eval_closed(ext, n, x) != rdp4_eval_closed(other, n, x))
          return "models disagree at n=" + std::to_string(n) + ", " + at(f, x);
    return std::nullopt;
  });

  checks.emplace_back("dickson.four_way_agreement", [&]() -> std::optional<std::string> {
    std::vector<std::vector<FqElem>> series;
    for (const auto& x : xs) series.push_back(genfun_series(f, x, options.n_max));
    for (std::uint64_t n = 0; n <= options.n_max; ++n) {
      std::optional<std::vector<BigInt>> coeffs;
      if (n <= exact_max) coeffs = rdp_coeffs_exact(n, kFourthKind);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto rec = rdp4_eval_recursive(f, n, xs[i]);
        if (rdp4_eval_closed(ext, n, xs[i]) != rec) return "closed form at n=" + std::to_string(n) + ", " + at(f, xs[i]);
        if (series[i][n] != rec) return "series at n=" + std::to_string(n) + ", " + at(f, xs[i]);
        if (coeffs && eval_integer_poly(f, *coeffs, xs[i]) != rec)
          return "exact coefficients at n=" + std::to_string(n) + ", " + at(f, xs[i]);
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("dickson.kind_combination", [&]() -> std::optional<std::string> {
    const auto three = f.from_int(3);
    const auto two = f.from_int(2);
    for (std::uint64_t n = 0; n <= options.n_max; ++n)
      for (const auto& x : xs) {
        const auto combo = f.sub(f.mul(three, classical_eval(ext, n, 1, x)), f.mul(two, classical_eval(ext, n, 0, x)));
        if (combo != rdp4_eval_recursive(f, n, x)) return "3E_n - 2D_n differs at n=" + std::to_string(n) + ", " + at(f, x);
      }
    return std::nullopt;
  });

  checks.emplace_back("dickson.quarter_value", [&]() -> std::optional<std::string> {
    for (std::uint64_t n = 0; n <= options.n_max; ++n) {
      const auto expect = f.div(f.from_int(3 * static_cast<std::int64_t>(n) - 1), f.pow(f.from_int(2), n));
      if (rdp4_eval_recursive(f, n, quarter) != expect) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  checks.emplace_back("dickson.periodicity", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(options.seed + 2);
    std::uniform_int_distribution<std::uint64_t> pick_n(1, period);
    std::uniform_int_distribution<std::uint64_t> pick_x(0, q - 1);
    for (int s = 0; s < 50; ++s) {
      const auto n = pick_n(rng);
      auto x = f.element(pick_x(rng));
      if (x == quarter) x = f.zero();
      if (rdp4_eval_closed(ext, n, x) != rdp4_eval_closed(ext, n + period, x))
        return "n=" + std::to_string(n) + ", " + at(f, x);
    }
    return std::nullopt;
  });

  checks.emplace_back("dickson.branch_symmetry", [&]() -> std::optional<std::string> {
    for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(options.n_max, 100); ++n)
      for (const auto& x : xs)
        if (rdp4_eval_closed(ext, n, x) != rdp4_eval_closed_swapped(ext, n, x))
          return "y <-> 1-y changes value at n=" + std::to_string(n) + ", " + at(f, x);
    return std::nullopt;
  });

  if (q <= 50) {
    checks.emplace_back("dickson.scaling_bijection", [&]() -> std::optional<std::string> {
      for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(options.n_max, 30); ++n) {
        auto injective = [&](const FqElem& c, const FqElem& d) {
          std::vector<bool> seen(q, false);
          for (const auto& x : xs) {
            const auto i = f.index_of(f.mul(c, rdp4_eval_recursive(f, n, f.mul(d, x))));
            if (seen[i]) return false;
            seen[i] = true;
          }
          return true;
        };
        const bool base = injective(f.one(), f.one());
        for (std::uint64_t ci = 1; ci < q; ++ci)
          for (std::uint64_t di = 1; di < q; ++di)
            if (injective(f.element(ci), f.element(di)) != base) return "n=" + std::to_string(n);
      }
      return std::nullopt;
    });
  }

  checks.emplace_back("dickson.frobenius_power_identity", [&]() -> std::optional<std::string> {
    for (unsigned k = 1; k <= f.degree(); ++k) {
      const auto r = frobenius_power_identity(f, k);
      if (!r.holds) return "identity fails at k=" + std::to_string(k);
      if (r.map_is_bijection) return "D_{p^k,3} is a bijection at k=" + std::to_string(k);
    }
    return std::nullopt;
  });

  checks.emplace_back("permutation.scan", [&]() -> std::optional<std::string> {
    try {
      (void)pp_scan(ext, 0, scan_max);
    } catch (const CriterionDisagreement& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  });

  checks.emplace_back("permutation.fiber_symmetry", [&]() -> std::optional<std::string> {
    const auto domain = two_to_one_domain(ext);
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(scan_max, 60); ++n)
      for (const auto& y : domain)
        if (rdp4_closed_form_at(ext, n, y) != rdp4_closed_form_at(ext, n, ext.sub(ext.one(), y)))
          return "f(y) != f(1-y) at n=" + std::to_string(n);
    return std::nullopt;
  });

  checks.emplace_back("permutation.fixed_point_tables", [&]() -> std::optional<std::string> {
    for (std::uint64_t n = 0; n <= 100; ++n)
      if (!fixed_point_tables_agree(f, n)) return "n=" + std::to_string(n);
    return std::nullopt;
  });

  checks.emplace_back("moments.power_sums", [&]() -> std::optional<std::string> {
    const auto sums = power_sums(f);
    for (std::uint64_t k = 0; k + 1 < q; ++k)
      if (!sums[k].is_zero()) return "k=" + std::to_string(k);
    if (sums[q - 1] != f.from_int(-1)) return "k=q-1";
    return std::nullopt;
  });

  checks.emplace_back("moments.corrected_matches_oracle", [&]() -> std::optional<std::string> {
    const auto div = verify_moments(f, Convention::corrected);
    if (!div.empty()) return std::to_string(div.size()) + " divergences, first n=" + std::to_string(div.front().n);
    return std::nullopt;
  });

  checks.emplace_back("moments.polynomial_identity", [&]() -> std::optional<std::string> {
    const auto oracle = first_moments_bruteforce(f, period);
    const Zp zp{f.p()};
    std::vector<std::uint64_t> d(period + 1, 0);
    for (std::uint64_t n = 1; n <= period; ++n) {
      const auto special = zp.mul(zp.reduce(static_cast<std::int64_t>((3 * n - 1) % f.p())), zp.pow(zp.inv(2), n % (f.p() - 1)));
      d[n] = zp.sub(f.prime_residue(oracle[n]), special);
    }
    if (moment_identity_lhs(f, d) != FpPoly(c_coefficients(f, Convention::corrected))) return "polynomials differ";
    return std::nullopt;
  });

  std::vector<PropertyResult> out;
  for (auto& [name, check] : checks) {
    PropertyResult r{name, true, {}};
    try {
      if (auto failure = check()) {
        r.passed = false;
        r.detail = *failure;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
    if (!r.passed && options.stop_on_failure) break;
  }
  return out;
}

}  // namespace dickson4
