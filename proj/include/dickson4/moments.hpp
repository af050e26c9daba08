#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dickson4/field.hpp"
#include "dickson4/fp_poly.hpp"

namespace dickson4 {

/// How the n = 0 term of the generating function enters the first-moment
/// identity. `as_printed` keeps the leading "+1" (factor 3t - 2);
/// `corrected` uses D_{0,3} = -1, which turns that factor into t.
enum class Convention { as_printed, corrected };

std::string to_string(Convention c);
/// Accepts "corrected", "as-printed" and "as_printed". Throws UsageError.
Convention parse_convention(std::string_view text);

/// First-moment data for one field. All entries are residues in F_p.
struct MomentTable {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  Convention convention = Convention::corrected;
  std::vector<std::uint64_t> b;  // 0..q^2 - q
  std::vector<std::uint64_t> c;  // 0..q^2 + q - 1; c[0] kept for diagnostics
  std::vector<std::uint64_t> d;  // 1..q^2 - 1, d[0] unused
  std::vector<std::uint64_t> a;  // a_n = sum_x D_{n,3}(1, x), a[0] unused
};

struct MomentDivergence {
  std::uint64_t n = 0;
  std::uint64_t recurrence = 0;
  FqElem oracle;
};

/// sum_{u in F_q} u^k for k = 0..q-1, by brute force.
std::vector<FqElem> power_sums(const FieldCtx& field);

/// b_i of -1 - (t - t^q)^{q-1} = sum b_i t^i from the closed digit formula
/// (i = alpha + beta q). Cross-checked against b_coefficients_expanded();
/// throws InternalInconsistency on mismatch.
std::vector<std::uint64_t> b_coefficients(const FieldCtx& field);

/// The same coefficients by expanding the binomial power directly.
std::vector<std::uint64_t> b_coefficients_expanded(const FieldCtx& field);

/// Right-hand side of the cleared first-moment identity, coefficients of
/// t^0..t^{q^2+q-1}:
///   -(t^q - t^{q-1} - 1) g(t) (1 + t + ... + t^{q^2-2})
///   - (2t - 1) (t^{2(q-1)} + sum_{k=1}^{q-1} (t-1)^{q-1-k} t^{2k} 4^{-k}) B(t)
/// with g = 3t - 2 (as printed) or g = t (corrected) and B = sum b_i t^i.
std::vector<std::uint64_t> c_coefficients(const FieldCtx& field, Convention convention);

/// Solves (t^q - t^{q-1} - 1) sum d_n t^n = sum c_i t^i for d by the
/// recurrence families, then a_n = d_n + (3n - 1)/2^n. Throws
/// IndexCoverageError if the families fail to partition [1, q^2 - 1].
MomentTable moment_table(const FieldCtx& field, Convention convention);

/// a_n = sum_x D_{n,3}(1, x) by direct evaluation (n >= 1).
FqElem first_moment_bruteforce(const FieldCtx& field, std::uint64_t n);

/// a_1..a_{n_max} by direct evaluation, one recurrence pass per x. Entry 0
/// is unused.
std::vector<FqElem> first_moments_bruteforce(const FieldCtx& field, std::uint64_t n_max);

/// Indices n in [1, q^2 - 1] where the table and the oracle differ.
std::vector<MomentDivergence> verify_moments(const FieldCtx& field, Convention convention);

/// (t^q - t^{q-1} - 1) * sum_{n=1}^{q^2-1} d_n t^n for d given as residues
/// (index 0 ignored).
FpPoly moment_identity_lhs(const FieldCtx& field, const std::vector<std::uint64_t>& d);

}  // namespace dickson4
