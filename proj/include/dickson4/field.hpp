#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dickson4/bigint.hpp"

namespace dickson4 {

/// Largest supported extension degree e of F_{p^e} over F_p.
inline constexpr unsigned kMaxExtensionDegree = 16;

/// Element of F_{p^e}, stored as e least nonnegative residues (constant term
/// first). Always canonical, so equality is componentwise.
class FqElem {
 public:
  FqElem() = default;

  std::span<const std::uint32_t> coeffs() const { return {c_.data(), size_}; }
  std::uint32_t operator[](std::size_t i) const { return c_[i]; }
  unsigned size() const { return size_; }

  bool is_zero() const;
  /// True when all coefficients above the constant term vanish.
  bool in_prime_field() const;

  friend bool operator==(const FqElem&, const FqElem&) = default;

 private:
  friend class FieldCtx;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
  std::uint8_t size_ = 0;
};

/// The parameters that pin a field model: characteristic, degree and the
/// monic modulus (constant term first, length e + 1).
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::vector<std::uint32_t> modulus;

  std::uint64_t q() const;
  /// "p=5,e=2,mod=[2,0,1]"
  std::string describe() const;
};

/// Arithmetic context for F_q = F_p[x]/(modulus). Immutable after
/// construction; every method is const and thread-safe.
///
/// Elements are enumerated by the index sum c_i p^i (constant coefficient
/// fastest). That index is also the total order used whenever a canonical
/// choice is required (default modulus, first non-square, square roots).
class FieldCtx {
 public:
  /// Builds F_{p^e}. Without a modulus, picks the least monic irreducible
  /// of degree e in enumeration order.
  static FieldCtx construct(std::uint64_t p, unsigned e,
                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  unsigned degree() const { return spec_.e; }
  std::uint64_t order() const { return q_; }
  std::string describe() const { return spec_.describe(); }

  FqElem zero() const;
  FqElem one() const { return one_; }
  FqElem half() const { return half_; }
  FqElem quarter() const { return quarter_; }
  /// Image of an integer in the prime subfield.
  FqElem from_int(std::int64_t v) const;
  FqElem from_bigint(const BigInt& v) const;
  /// Builds an element from coefficients (constant first); shorter lists are
  /// zero padded, entries are reduced mod p. Throws UsageError if too long.
  FqElem from_coeffs(std::span<const std::int64_t> coeffs) const;

  FqElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FqElem& x) const;
  /// All q elements in enumeration order.
  std::vector<FqElem> elements() const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  FqElem inv(const FqElem& a) const;
  FqElem div(const FqElem& a, const FqElem& b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; 0^0 = 1.
  FqElem pow(const FqElem& a, std::uint64_t m) const;
  FqElem pow(const FqElem& a, const BigInt& m) const;

  /// Euler's criterion; zero counts as a square.
  bool is_square(const FqElem& a) const;
  /// Square root by Tonelli-Shanks. Of the two roots, returns the one with
  /// the smaller enumeration index.
  std::optional<FqElem> sqrt_opt(const FqElem& a) const;
  /// First non-square in enumeration order.
  FqElem first_nonsquare() const { return nonsquare_; }

  /// Residue of an element of the prime subfield. Throws
  /// InternalInconsistency if x lies outside F_p.
  std::uint32_t prime_residue(const FqElem& x) const;

  /// Bare residue for prime-subfield elements, "[c0,...,c_{e-1}]" otherwise.
  std::string format(const FqElem& x) const;
  /// Inverse of format(); also accepts negative integers like "-2".
  FqElem parse(std::string_view text) const;

 private:
  FieldCtx() = default;

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  FqElem one_;
  FqElem half_;
  FqElem quarter_;
  FqElem nonsquare_;
  // q - 1 = 2^two_adicity_ * odd_part_
  unsigned two_adicity_ = 0;
  std::uint64_t odd_part_ = 0;
};

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p of a monic polynomial (constant first). Uses a
/// root search for degree <= 3 and Rabin's test otherwise.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p);

/// Rabin's test on its own (valid for every degree), kept separate so the
/// two routes can be cross-checked.
bool rabin_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p);

}  // namespace dickson4
