#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dickson4/field.hpp"

namespace dickson4 {

struct VerifyOptions {
  /// Largest n for evaluator agreement checks.
  std::uint64_t n_max = 300;
  /// Largest n for the permutation scan; clipped to q^2 - 1.
  std::uint64_t scan_max = 0;  // 0 = q^2 - 1
  /// Random samples for the field-axiom checks.
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20160101;
  bool stop_on_failure = true;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the property suite of every module against one field. With
/// stop_on_failure the list ends at the first failing property.
std::vector<PropertyResult> run_verification(const FieldCtx& field, const VerifyOptions& options);

}  // namespace dickson4
