#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dickson4/bigint.hpp"
#include "dickson4/dickson.hpp"
#include "dickson4/field.hpp"
#include "dickson4/quad_ext.hpp"

namespace dickson4 {

/// Verdicts of every permutation criterion for D_{n,3}(1, x) over one F_q.
struct PPReport {
  std::uint64_t q = 0;
  BigInt n;
  bool direct = false;
  bool hermite = false;
  bool mod6_necessary = false;
  bool two_to_one = false;
  std::optional<bool> aux_equiv;  // even n only
  std::vector<FqElem> value_table;
};

/// The auxiliary polynomial f_n with 2^n D_{n,3}(1, x) = f_n(1 - 4x), n even.
struct AuxPoly {
  BigInt n;
  std::vector<BigInt> coeffs;  // constant first, degree n/2, leading -1
};

/// D_{n,3}(1, x) at every x in enumeration order.
std::vector<FqElem> value_table(const FieldCtx& field, const BigInt& n);

/// True iff the q values are pairwise distinct. Throws LengthMismatch unless
/// values.size() == q.
bool is_pp_direct(const FieldCtx& field, std::span<const FqElem> values);

/// Power sums sum_x f(x)^i for i = 0..q-1 (0^0 = 1).
std::vector<FqElem> hermite_moments(const FieldCtx& field, std::span<const FqElem> values);

/// Hermite's criterion: moments vanish for i <= q-2 and equal -1 at i = q-1.
bool hermite_check(const FieldCtx& field, std::span<const FqElem> values);

/// Necessary condition for a permutation: n = 2 mod 6.
bool necessary_mod6(const BigInt& n);

/// D_{n,3}(1, 1) (period 6) and D_{n,3}(1, -2) (period 2) as small integers.
struct FixedPointValues {
  int at_one = 0;
  int at_minus_two = 0;
};

FixedPointValues fixed_point_tables(const BigInt& n);

/// Compares the tables above against the recurrence in the given field.
bool fixed_point_tables_agree(const FieldCtx& field, const BigInt& n);

struct TwoToOneResult {
  bool verdict = false;          // every fiber has size 2 and the special value is missed
  bool all_fibers_two = false;
  bool hits_special_value = false;
  std::vector<FqElem> image;     // distinct values of f on S, sorted by index
};

/// Evaluates f(y) = ((2 - y) y^n - (y + 1)(1 - y)^n) / (2y - 1) on
/// S = (F_q u V) \ {1/2} and tests that f is 2-to-1 and never equals
/// (3n - 1)/2^n. Requires n >= 1.
TwoToOneResult two_to_one_characterization(const QuadExtCtx& ext, const BigInt& n);

/// S = (F_q u V) \ {1/2}, sorted by F_{q^2} index.
std::vector<QuadElem> two_to_one_domain(const QuadExtCtx& ext);

/// Exact f_n for even 0 <= n <= n_max. The j-th coefficient is taken as
/// 3 C(n, 2j+1) - C(n, 2j). Throws OddDegree / DegreeTooLarge.
AuxPoly aux_poly(const BigInt& n, unsigned n_max = kDefaultExactDegreeLimit);

/// f_n coefficients reduced mod p via Lucas' theorem; no degree cap beyond
/// memory.
std::vector<std::uint64_t> aux_poly_residues(const BigInt& n, std::uint64_t p);

struct AuxEquivalence {
  bool identity_holds = false;  // 2^n D_{n,3}(1, x) == f_n(1 - 4x) for all x
  bool f_n_is_pp = false;
  bool d_is_pp = false;
};

AuxEquivalence aux_identity_and_equiv(const FieldCtx& field, const BigInt& n);

/// Runs every criterion for each n in [n_lo, n_hi] and cross-checks them.
/// Throws CriterionDisagreement on any mismatch.
std::vector<PPReport> pp_scan(const QuadExtCtx& ext, const BigInt& n_lo, const BigInt& n_hi);

/// Single-n form of pp_scan.
PPReport pp_report(const QuadExtCtx& ext, const BigInt& n);

}  // namespace dickson4
