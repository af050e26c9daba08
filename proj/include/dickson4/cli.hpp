#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dickson4/moments.hpp"

namespace dickson4 {

enum class Command { eval, coeffs, scan, moments, verify };
enum class OutputFormat { text, csv, json };

/// Everything a run depends on; the tool reads no files or environment.
struct RunConfig {
  Command command = Command::eval;
  std::uint64_t p = 0;
  unsigned e = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::string n;       // decimal, any length
  std::string n_min = "0";
  std::string n_max;
  std::string x;
  std::optional<std::string> a;
  int kind = 3;
  bool aux = false;
  Convention convention = Convention::corrected;
  std::string emit = "table";  // table | divergences
  OutputFormat format = OutputFormat::text;
  std::string out_path;  // empty = the given output stream
};

/// Homogeneous records; each is a JSON object with the same keys in the
/// same order.
using Record = nlohmann::ordered_json;

/// CSV (header row, RFC 4180 quoting) or JSON lines. Field elements are
/// expected to be stored already rendered (bare residue or coefficient
/// array).
void emit(const std::vector<Record>& records, const std::vector<std::string>& columns, OutputFormat format,
          std::ostream& sink);

/// Exit codes: 0 success, 1 usage/config error, 2 internal consistency
/// failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dickson4
