#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dickson4 {

/// Arbitrary-precision signed integer used for degrees, exponents and exact
/// polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// Parses a nonnegative decimal integer of any length. Throws UsageError on
/// anything other than [0-9]+.
BigInt parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Least nonnegative residue of value modulo m (m > 0).
std::uint64_t mod_u64(const BigInt& value, std::uint64_t m);

/// Exact binomial coefficient C(m, r); zero when r < 0 or r > m.
BigInt binomial(std::int64_t m, std::int64_t r);

/// C(m, r) mod p via Lucas' theorem, p prime.
std::uint64_t binomial_mod_p(std::uint64_t m, std::uint64_t r, std::uint64_t p);

}  // namespace dickson4
