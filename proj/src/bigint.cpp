#include "dickson4/bigint.hpp"

#include "dickson4/errors.hpp"

namespace dickson4 {

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw UsageError("expected a nonnegative decimal integer, got an empty string");
  BigInt value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw UsageError("expected a nonnegative decimal integer, got '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::uint64_t mod_u64(const BigInt& value, std::uint64_t m) {
  BigInt r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

BigInt binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_mod_p(std::uint64_t m, std::uint64_t r, std::uint64_t p) {
  std::uint64_t result = 1;
  while (m > 0 || r > 0) {
    const auto mi = m % p;
    const auto ri = r % p;
    if (ri > mi) return 0;
    // C(mi, ri) mod p with mi < p: plain multiplicative formula
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < ri; ++i) {
      num = num * ((mi - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible since ri < p
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    result = result * (num * inv % p) % p;
    m /= p;
    r /= p;
  }
  return result;
}

CriterionDisagreement::CriterionDisagreement(std::uint64_t q, BigInt n, std::string criterion, bool expected,
                                             bool got)
    : InternalInconsistency("criterion disagreement at q=" + std::to_string(q) + ", n=" + n.str() + ": direct=" +
                            (expected ? "true" : "false") + " but " + criterion + "=" + (got ? "true" : "false")),
      q_(q),
      n_(std::move(n)),
      criterion_(std::move(criterion)),
      expected_(expected),
      got_(got) {}

}  // namespace dickson4
