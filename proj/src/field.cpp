#include "dickson4/field.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "dickson4/errors.hpp"
#include "dickson4/fp_poly.hpp"

namespace dickson4 {

namespace {

// q^2 indices must fit in 64 bits and p^2 in a word product.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

std::string join_coeffs(std::span<const std::uint32_t> c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool FqElem::is_zero() const {
  for (unsigned i = 0; i < size_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FqElem::in_prime_field() const {
  for (unsigned i = 1; i < size_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::uint64_t FieldSpec::q() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

std::string FieldSpec::describe() const {
  return "p=" + std::to_string(p) + ",e=" + std::to_string(e) + ",mod=" + join_coeffs(modulus);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool rabin_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p) {
  const Zp f{p};
  const unsigned e = static_cast<unsigned>(monic.size() - 1);
  if (e == 0) return false;
  if (e == 1) return true;
  const FpPoly m(std::vector<std::uint64_t>(monic.begin(), monic.end()));
  const FpPoly x({0, 1});
  // frob[k] = x^{p^k} mod m
  std::vector<FpPoly> frob{poly_mod(f, x, m)};
  for (unsigned k = 1; k <= e; ++k) frob.push_back(poly_powmod(f, frob.back(), p, m));
  if (frob[e] != poly_mod(f, x, m)) return false;
  for (unsigned r = 2; r <= e; ++r) {
    if (e % r != 0 || !is_prime(r)) continue;
    const auto g = poly_gcd(f, m, poly_sub(f, frob[e / r], x));
    if (g.degree() != 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p) {
  const auto e = monic.size() - 1;
  if (e == 0) return false;
  if (e == 1) return true;
  if (e <= 3) {
    // a reducible polynomial of degree <= 3 has a linear factor
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t acc = 0;
      for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = (acc * r + *it) % p;
      if (acc == 0) return false;
    }
    return true;
  }
  return rabin_irreducible(monic, p);
}

FieldCtx FieldCtx::construct(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (p <= 3 || !is_prime(p))
    throw UnsupportedCharacteristic("characteristic must be a prime > 3, got " + std::to_string(p));
  if (e < 1 || e > kMaxExtensionDegree)
    throw UsageError("extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxOrder) throw UsageError("field order p^e exceeds the supported range");
    }
  }

  FieldCtx ctx;
  ctx.spec_.p = p;
  ctx.spec_.e = e;
  ctx.q_ = ctx.spec_.q();

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != e + 1) throw InvalidModulus("modulus must have exactly e + 1 coefficients");
    if (m.back() != 1) throw InvalidModulus("modulus must be monic");
    for (auto c : m)
      if (c >= p) throw InvalidModulus("modulus coefficients must lie in [0, p-1]");
    if (!is_irreducible(m, p)) throw ReducibleModulus("modulus " + join_coeffs(m) + " is reducible over F_" + std::to_string(p));
    ctx.spec_.modulus = m;
  } else {
    std::vector<std::uint32_t> m(e + 1, 0);
    m[e] = 1;
    for (std::uint64_t idx = 0;; ++idx) {
      auto rest = idx;
      for (unsigned i = 0; i < e; ++i) {
        m[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_irreducible(m, p)) break;
    }
    ctx.spec_.modulus = m;
  }

  ctx.one_ = ctx.from_int(1);
  ctx.half_ = ctx.inv(ctx.from_int(2));
  ctx.quarter_ = ctx.inv(ctx.from_int(4));

  auto odd = ctx.q_ - 1;
  while (odd % 2 == 0) {
    odd /= 2;
    ++ctx.two_adicity_;
  }
  ctx.odd_part_ = odd;

  for (std::uint64_t idx = 1; idx < ctx.q_; ++idx) {
    auto z = ctx.element(idx);
    if (!ctx.is_square(z)) {
      ctx.nonsquare_ = z;
      break;
    }
  }
  return ctx;
}

FqElem FieldCtx::zero() const {
  FqElem z;
  z.size_ = static_cast<std::uint8_t>(spec_.e);
  return z;
}

FqElem FieldCtx::from_int(std::int64_t v) const {
  auto z = zero();
  z.c_[0] = static_cast<std::uint32_t>(Zp{spec_.p}.reduce(v));
  return z;
}

FqElem FieldCtx::from_bigint(const BigInt& v) const {
  auto z = zero();
  z.c_[0] = static_cast<std::uint32_t>(mod_u64(v, spec_.p));
  return z;
}

FqElem FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > spec_.e) throw UsageError("too many coefficients for a field of degree " + std::to_string(spec_.e));
  auto z = zero();
  const Zp f{spec_.p};
  for (std::size_t i = 0; i < coeffs.size(); ++i) z.c_[i] = static_cast<std::uint32_t>(f.reduce(coeffs[i]));
  return z;
}

FqElem FieldCtx::element(std::uint64_t index) const {
  auto z = zero();
  for (unsigned i = 0; i < spec_.e; ++i) {
    z.c_[i] = static_cast<std::uint32_t>(index % spec_.p);
    index /= spec_.p;
  }
  return z;
}

std::uint64_t FieldCtx::index_of(const FqElem& x) const {
  std::uint64_t idx = 0;
  for (unsigned i = spec_.e; i-- > 0;) idx = idx * spec_.p + x.c_[i];
  return idx;
}

std::vector<FqElem> FieldCtx::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

FqElem FieldCtx::add(const FqElem& a, const FqElem& b) const {
  auto z = zero();
  const auto p = spec_.p;
  for (unsigned i = 0; i < spec_.e; ++i) {
    auto s = std::uint64_t{a.c_[i]} + b.c_[i];
    z.c_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return z;
}

FqElem FieldCtx::sub(const FqElem& a, const FqElem& b) const {
  auto z = zero();
  const auto p = spec_.p;
  for (unsigned i = 0; i < spec_.e; ++i)
    z.c_[i] = static_cast<std::uint32_t>(a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p - b.c_[i]);
  return z;
}

FqElem FieldCtx::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FieldCtx::mul(const FqElem& a, const FqElem& b) const {
  const auto p = spec_.p;
  const unsigned e = spec_.e;
  auto z = zero();
  if (e == 1) {
    z.c_[0] = static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p);
    return z;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (unsigned i = 0; i < e; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
  }
  const auto& m = spec_.modulus;
  for (unsigned k = 2 * e - 2; k >= e; --k) {
    const auto lead = prod[k];
    if (lead == 0) continue;
    // x^k = x^{k-e} * x^e and x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (unsigned i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - lead) * m[i]) % p;
    prod[k] = 0;
  }
  for (unsigned i = 0; i < e; ++i) z.c_[i] = static_cast<std::uint32_t>(prod[i]);
  return z;
}

FqElem FieldCtx::pow(const FqElem& a, std::uint64_t m) const {
  auto result = one_;
  auto base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

FqElem FieldCtx::pow(const FqElem& a, const BigInt& m) const {
  if (m < 0) throw std::domain_error("negative exponent");
  if (m == 0) return one_;
  auto result = one_;
  const auto top = boost::multiprecision::msb(m);
  for (auto bit = top + 1; bit-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(m, bit)) result = mul(result, a);
  }
  return result;
}

FqElem FieldCtx::inv(const FqElem& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

bool FieldCtx::is_square(const FqElem& a) const {
  if (a.is_zero()) return true;
  return pow(a, (q_ - 1) / 2) == one_;
}

std::optional<FqElem> FieldCtx::sqrt_opt(const FqElem& a) const {
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks
  unsigned m = two_adicity_;
  auto c = pow(nonsquare_, odd_part_);
  auto t = pow(a, odd_part_);
  auto r = pow(a, (odd_part_ + 1) / 2);
  while (t != one_) {
    unsigned i = 0;
    for (auto tt = t; tt != one_; tt = mul(tt, tt)) ++i;
    auto b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  auto other = neg(r);
  return index_of(other) < index_of(r) ? other : r;
}

std::uint32_t FieldCtx::prime_residue(const FqElem& x) const {
  if (!x.in_prime_field()) throw InternalInconsistency("element " + format(x) + " is not in the prime field");
  return x.c_[0];
}

std::string FieldCtx::format(const FqElem& x) const {
  if (x.in_prime_field()) return std::to_string(x.c_[0]);
  return join_coeffs(x.coeffs());
}

FqElem FieldCtx::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty field element");
  if (text.front() != '[') return from_int(parse_int(text));
  if (text.back() != ']') throw UsageError("unterminated coefficient list: '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> coeffs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    coeffs.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_coeffs(coeffs);
}

}  // namespace dickson4
