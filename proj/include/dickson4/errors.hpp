#pragma once

#include <stdexcept>
#include <string>

#include "dickson4/bigint.hpp"

namespace dickson4 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

class ReducibleModulus : public Error {
 public:
  using Error::Error;
};

/// Modulus not monic, wrong degree, or coefficient out of range.
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class KindOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class OddDegree : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A value that must provably lie in some subfield did not, or two exact
/// computations that must agree did not. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class IndexCoverageError : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// Two permutation criteria disagreed on the same (q, n).
class CriterionDisagreement : public InternalInconsistency {
 public:
  CriterionDisagreement(std::uint64_t q, BigInt n, std::string criterion, bool expected, bool got);

  std::uint64_t q() const { return q_; }
  const BigInt& n() const { return n_; }
  const std::string& criterion() const { return criterion_; }
  bool direct_verdict() const { return expected_; }
  bool other_verdict() const { return got_; }

 private:
  std::uint64_t q_;
  BigInt n_;
  std::string criterion_;
  bool expected_;
  bool got_;
};

}  // namespace dickson4
