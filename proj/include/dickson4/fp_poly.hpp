#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dickson4 {

/// Arithmetic modulo a prime p held in 64-bit words (p < 2^32).
struct Zp {
  std::uint64_t p;

  std::uint64_t reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t m) const;
  std::uint64_t inv(std::uint64_t a) const;
};

/// Dense polynomial over F_p, index = degree, trailing zeros trimmed (the
/// zero polynomial is empty). Doubles as a truncated power series in t.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static FpPoly monomial(std::uint64_t coeff, std::size_t degree);

  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  /// Coefficient of t^i, zero past the end.
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> c_;
};

FpPoly poly_add(const Zp& f, const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const Zp& f, const FpPoly& a, const FpPoly& b);
FpPoly poly_scale(const Zp& f, const FpPoly& a, std::uint64_t s);
FpPoly poly_mul(const Zp& f, const FpPoly& a, const FpPoly& b);
/// Remainder of a modulo b (b nonzero).
FpPoly poly_mod(const Zp& f, const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both are zero).
FpPoly poly_gcd(const Zp& f, FpPoly a, FpPoly b);
FpPoly poly_pow(const Zp& f, const FpPoly& a, std::uint64_t m);
/// a^m mod modulus.
FpPoly poly_powmod(const Zp& f, const FpPoly& a, std::uint64_t m, const FpPoly& modulus);

}  // namespace dickson4
