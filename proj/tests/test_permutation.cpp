#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dickson4/dickson.hpp"
#include "dickson4/errors.hpp"
#include "dickson4/permutation.hpp"
#include "oracles.hpp"

using namespace dickson4;

namespace {

std::vector<FqElem> table_of(const FieldCtx& f, std::initializer_list<int> v) {
  std::vector<FqElem> out;
  for (int x : v) out.push_back(f.from_int(x));
  return out;
}

/// Injectivity of x -> D_{n,3}(1, x) computed from definition coefficients.
bool oracle_pp(const FieldCtx& f, long n) {
  oracle::NaiveField nf{static_cast<long>(f.p()), {}};
  for (auto c : f.spec().modulus) nf.m.push_back(c);
  const auto coeffs = oracle::definition_coeffs(n, 3);
  std::vector<long> idx;
  for (long i = 0; i < nf.q(); ++i) idx.push_back(nf.index(nf.eval(coeffs, nf.elem(i))));
  return oracle::injective(idx);
}

}  // namespace

TEST_SUITE("permutation") {

TEST_CASE("direct test examples") {
  const auto f = FieldCtx::construct(5, 1);
  CHECK(is_pp_direct(f, table_of(f, {0, 1, 2, 3, 4})));
  CHECK_FALSE(is_pp_direct(f, table_of(f, {3, 3, 3, 3, 3})));
  CHECK(value_table(f, 8) == table_of(f, {1, 2, 1, 4, 3}));
  CHECK_FALSE(is_pp_direct(f, value_table(f, 8)));
  CHECK_THROWS_AS(is_pp_direct(f, table_of(f, {0, 1, 2})), LengthMismatch);
}

TEST_CASE("Hermite examples") {
  const auto f = FieldCtx::construct(5, 1);
  const auto id = table_of(f, {0, 1, 2, 3, 4});
  const auto m = hermite_moments(f, id);
  CHECK(m == table_of(f, {0, 0, 0, 0, -1}));
  CHECK(hermite_check(f, id));
  CHECK_FALSE(hermite_check(f, table_of(f, {2, 2, 2, 2, 2})));
}

TEST_CASE("Hermite agrees with the direct test on random tables") {
  const auto f = FieldCtx::construct(7, 1);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, 6);
  int perms = 0;
  for (int s = 0; s < 1000; ++s) {
    std::vector<FqElem> values;
    if (s % 2 == 0) {
      for (int i = 0; i < 7; ++i) values.push_back(f.element(pick(rng)));
    } else {
      values = f.elements();
      std::shuffle(values.begin(), values.end(), rng);
    }
    const bool direct = is_pp_direct(f, values);
    perms += direct;
    CHECK(hermite_check(f, values) == direct);
  }
  CHECK(perms >= 500);
}

TEST_CASE("mod 6 filter") {
  CHECK(necessary_mod6(2));
  CHECK(necessary_mod6(8));
  CHECK_FALSE(necessary_mod6(5));
  CHECK_FALSE(necessary_mod6(0));
  CHECK(necessary_mod6(parse_decimal("600000000000000000000000000002")));
}

TEST_CASE("fixed-point tables") {
  CHECK(fixed_point_tables(2).at_one == 2);
  CHECK(fixed_point_tables(2).at_minus_two == -1);
  CHECK(fixed_point_tables(5).at_one == -2);
  CHECK(fixed_point_tables(5).at_minus_two == 1);
  CHECK(fixed_point_tables(0).at_one == -1);
  CHECK(fixed_point_tables(0).at_minus_two == -1);
  for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}, {5u, 2u}}) {
    const auto f = FieldCtx::construct(p, e);
    for (int n = 0; n <= 100; ++n) {
      CHECK(fixed_point_tables_agree(f, n));
      const auto t = fixed_point_tables(n);
      CHECK(rdp4_eval_recursive(f, n, f.one()) == f.from_int(t.at_one));
      CHECK(rdp4_eval_recursive(f, n, f.from_int(-2)) == f.from_int(t.at_minus_two));
    }
  }
}

TEST_CASE("two-to-one characterisation examples") {
  const QuadExtCtx ext(FieldCtx::construct(5, 1));
  CHECK(two_to_one_characterization(ext, 2).verdict);
  CHECK_FALSE(two_to_one_characterization(ext, 8).verdict);
  CHECK_FALSE(two_to_one_characterization(ext, 3).verdict);
  CHECK(two_to_one_domain(ext).size() == 8);
}

TEST_CASE("two-to-one image is F_q minus the special value for permutations") {
  for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}}) {
    const QuadExtCtx ext(FieldCtx::construct(p, e));
    const auto& f = ext.base();
    const auto q = f.order();
    for (std::uint64_t n = 1; n < q * q - 1; ++n) {
      const auto r = two_to_one_characterization(ext, n);
      CHECK(r.verdict == is_pp_direct(f, value_table(f, n)));
      if (r.verdict) {
        CHECK(r.image.size() == q - 1);
        const auto special = quarter_point_value(f, n);
        CHECK(std::find(r.image.begin(), r.image.end(), special) == r.image.end());
      }
    }
  }
}

TEST_CASE("aux polynomial") {
  CHECK(aux_poly(2).coeffs == std::vector<BigInt>{5, -1});
  CHECK(aux_poly(0).coeffs == std::vector<BigInt>{-1});
  CHECK_THROWS_AS(aux_poly(3), OddDegree);
  CHECK_THROWS_AS(aux_poly(514), DegreeTooLarge);
  // coefficients against the rational form (3n - 8j - 1)/(n + 1) C(n + 1, 2j + 1)
  for (long n = 2; n <= 200; n += 2) {
    const auto c = aux_poly(n).coeffs;
    REQUIRE(c.size() == static_cast<std::size_t>(n / 2 + 1));
    CHECK(c.back() == -1);
    for (long j = 0; j < n / 2; ++j) {
      oracle::cpp_rational r(oracle::cpp_int(3 * n - 8 * j - 1), oracle::cpp_int(n + 1));
      r *= oracle::binom(n + 1, 2 * j + 1);
      REQUIRE(denominator(r) == 1);
      CHECK(c[static_cast<std::size_t>(j)] == numerator(r));
    }
  }
  for (long n = 0; n <= 300; n += 2) {
    const auto exact = aux_poly(n, 1000).coeffs;
    const auto res = aux_poly_residues(n, 7);
    REQUIRE(res.size() == exact.size());
    for (std::size_t i = 0; i < res.size(); ++i) CHECK(res[i] == mod_u64(exact[i], 7));
  }
}

TEST_CASE("aux identity and equivalence") {
  for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}}) {
    const auto f = FieldCtx::construct(p, e);
    for (int n = 0; n <= 300; n += 2) {
      const auto r = aux_identity_and_equiv(f, n);
      CHECK(r.identity_holds);
      CHECK(r.f_n_is_pp == r.d_is_pp);
    }
  }
  CHECK_THROWS_AS(aux_identity_and_equiv(FieldCtx::construct(5, 1), 3), OddDegree);
}

TEST_CASE("scan agrees with the definition oracle") {
  for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {5u, 2u}}) {
    const QuadExtCtx ext(FieldCtx::construct(p, e));
    const auto q = ext.base().order();
    const auto reports = pp_scan(ext, 0, q * q - 1);
    REQUIRE(reports.size() == q * q);
    for (const auto& r : reports) {
      const auto n = static_cast<long>(r.n);
      if (n <= 300) CHECK(r.direct == oracle_pp(ext.base(), n));
      CHECK(r.hermite == r.direct);
      CHECK(r.two_to_one == r.direct);
      if (r.direct) CHECK(n % 6 == 2);
      CHECK(r.aux_equiv.has_value() == (n % 2 == 0));
      if (r.aux_equiv) CHECK(*r.aux_equiv == r.direct);
    }
  }
}

TEST_CASE("scan over F_5 finds the known permutations") {
  const QuadExtCtx ext(FieldCtx::construct(5, 1));
  std::set<long> found;
  for (const auto& r : pp_scan(ext, 0, 24))
    if (r.direct) found.insert(static_cast<long>(r.n));
  // brute force from the definition
  std::set<long> want;
  for (long n = 0; n <= 24; ++n)
    if (oracle_pp(ext.base(), n)) want.insert(n);
  CHECK(found == want);
  CHECK(found.count(2) == 1);
  CHECK(found.count(8) == 0);
}

TEST_CASE("scan handles a window far from zero") {
  const QuadExtCtx ext(FieldCtx::construct(7, 1));
  const auto lo = parse_decimal("1000000000000000000000");
  const auto reports = pp_scan(ext, lo, lo + 20);
  REQUIRE(reports.size() == 21);
  // the whole value table has period lcm(q^2 - 1, p) = 336 in n
  for (const auto& r : reports) {
    const auto folded = static_cast<long>(r.n % 336);
    CHECK(r.direct == oracle_pp(ext.base(), folded == 0 ? 336 : folded));
  }
}

}  // TEST_SUITE
