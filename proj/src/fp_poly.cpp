#include "dickson4/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dickson4 {

std::uint64_t Zp::pow(std::uint64_t a, std::uint64_t m) const {
  std::uint64_t result = 1 % p;
  a %= p;
  while (m > 0) {
    if (m & 1) result = mul(result, a);
    a = mul(a, a);
    m >>= 1;
  }
  return result;
}

std::uint64_t Zp::inv(std::uint64_t a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p - 2);
}

FpPoly FpPoly::monomial(std::uint64_t coeff, std::size_t degree) {
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return FpPoly(std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly poly_add(const Zp& f, const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
  return FpPoly(std::move(c));
}

FpPoly poly_sub(const Zp& f, const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return FpPoly(std::move(c));
}

FpPoly poly_scale(const Zp& f, const FpPoly& a, std::uint64_t s) {
  std::vector<std::uint64_t> c(a.coeffs());
  for (auto& v : c) v = f.mul(v, s % f.p);
  return FpPoly(std::move(c));
}

FpPoly poly_mul(const Zp& f, const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = (c[i + j] + x[i] * y[j]) % f.p;
  }
  return FpPoly(std::move(c));
}

FpPoly poly_mod(const Zp& f, const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<std::uint64_t> r(a.coeffs());
  const auto& d = b.coeffs();
  const auto lead_inv = f.inv(d.back());
  while (r.size() >= d.size()) {
    const auto factor = f.mul(r.back(), lead_inv);
    const auto shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(factor, d[i]));
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return FpPoly(std::move(r));
}

FpPoly poly_gcd(const Zp& f, FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.coeffs().back()));
}

FpPoly poly_pow(const Zp& f, const FpPoly& a, std::uint64_t m) {
  FpPoly result({1});
  FpPoly base = a;
  while (m > 0) {
    if (m & 1) result = poly_mul(f, result, base);
    m >>= 1;
    if (m > 0) base = poly_mul(f, base, base);
  }
  return result;
}

FpPoly poly_powmod(const Zp& f, const FpPoly& a, std::uint64_t m, const FpPoly& modulus) {
  FpPoly result = poly_mod(f, FpPoly({1}), modulus);
  FpPoly base = poly_mod(f, a, modulus);
  while (m > 0) {
    if (m & 1) result = poly_mod(f, poly_mul(f, result, base), modulus);
    m >>= 1;
    if (m > 0) base = poly_mod(f, poly_mul(f, base, base), modulus);
  }
  return result;
}

}  // namespace dickson4
