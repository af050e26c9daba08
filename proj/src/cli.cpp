#include "dickson4/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "dickson4/dickson.hpp"
#include "dickson4/errors.hpp"
#include "dickson4/permutation.hpp"
#include "dickson4/quad_ext.hpp"
#include "dickson4/verify.hpp"

namespace dickson4 {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

nlohmann::ordered_json element_json(const FqElem& x) {
  if (x.in_prime_field()) return x[0];
  auto arr = nlohmann::ordered_json::array();
  for (auto c : x.coeffs()) arr.push_back(c);
  return arr;
}

nlohmann::ordered_json bigint_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  return n.str();
}

std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

FieldCtx make_field(const RunConfig& c) { return FieldCtx::construct(c.p, c.e, c.modulus); }

std::string field_header(const FieldCtx& f) { return "# field " + f.describe(); }

int run_eval(const RunConfig& c, std::ostream& out) {
  const auto field = make_field(c);
  const auto n = parse_decimal(c.n);
  const auto x = field.parse(c.x);
  const auto value = c.a ? rdp_eval_param(field, n, field.parse(*c.a), x) : rdp4_eval_recursive(field, n, x);
  if (c.format == OutputFormat::json) {
    Record r;
    r["field"] = field.describe();
    r["n"] = bigint_json(n);
    r["x"] = element_json(x);
    r["a"] = c.a ? element_json(field.parse(*c.a)) : element_json(field.one());
    r["value"] = element_json(value);
    out << r.dump() << '\n';
  } else {
    out << field.format(value) << '\n';
  }
  return kExitOk;
}

int run_coeffs(const RunConfig& c, std::ostream& out) {
  const auto n = parse_decimal(c.n);
  const auto coeffs = c.aux ? aux_poly(n).coeffs : rdp_coeffs_exact(n, c.kind);
  const bool mod_p = c.p != 0;
  if (mod_p) (void)FieldCtx::construct(c.p, 1);  // rejects p <= 3 and composites

  std::vector<std::string> rendered;
  for (const auto& v : coeffs) rendered.push_back(mod_p ? std::to_string(mod_u64(v, c.p)) : v.str());

  if (c.format == OutputFormat::json) {
    Record r;
    r["ring"] = mod_p ? "Fp" : "Z";
    if (mod_p) r["p"] = c.p;
    r["n"] = bigint_json(n);
    r["poly"] = c.aux ? "aux" : "rdp";
    if (!c.aux) r["kind"] = c.kind;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (mod_p) arr.push_back(mod_u64(coeffs[i], c.p));
      else arr.push_back(rendered[i]);
    }
    r["coeffs"] = arr;
    out << r.dump() << '\n';
  } else {
    out << '[';
    for (std::size_t i = 0; i < rendered.size(); ++i) out << (i ? "," : "") << rendered[i];
    out << "]\n";
  }
  return kExitOk;
}

int run_scan(const RunConfig& c, std::ostream& out) {
  const QuadExtCtx ext(make_field(c));
  const auto lo = parse_decimal(c.n_min);
  const auto hi = parse_decimal(c.n_max);
  const auto reports = pp_scan(ext, lo, hi);
  std::vector<Record> records;
  for (const auto& r : reports) {
    Record rec;
    rec["q"] = r.q;
    rec["n"] = bigint_json(r.n);
    rec["direct"] = r.direct;
    rec["hermite"] = r.hermite;
    rec["mod6"] = r.mod6_necessary;
    rec["two_to_one"] = r.two_to_one;
    rec["aux_equiv"] = r.aux_equiv ? nlohmann::ordered_json(*r.aux_equiv) : nlohmann::ordered_json(nullptr);
    if (c.format == OutputFormat::json) rec["field"] = ext.base().describe();
    records.push_back(std::move(rec));
  }
  if (c.format != OutputFormat::json) out << field_header(ext.base()) << '\n';
  emit(records, {"q", "n", "direct", "hermite", "mod6", "two_to_one", "aux_equiv"},
       c.format == OutputFormat::json ? OutputFormat::json : OutputFormat::csv, out);
  return kExitOk;
}

int run_moments(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto field = make_field(c);
  const auto table = moment_table(field, c.convention);
  const auto top = table.q * table.q - 1;
  const auto oracle = first_moments_bruteforce(field, top);
  const auto format = c.format == OutputFormat::json ? OutputFormat::json : OutputFormat::csv;

  std::vector<Record> records;
  std::vector<std::string> columns;
  std::size_t mismatches = 0;
  for (std::uint64_t n = 1; n <= top; ++n) {
    const bool match = oracle[n] == field.from_int(static_cast<std::int64_t>(table.a[n]));
    if (!match) ++mismatches;
    if (c.emit == "divergences" && match) continue;
    Record rec;
    rec["n"] = n;
    if (c.emit == "divergences") {
      rec["recurrence"] = table.a[n];
      rec["oracle"] = element_json(oracle[n]);
    } else {
      rec["a_n"] = table.a[n];
      rec["d_n"] = table.d[n];
      rec["oracle"] = element_json(oracle[n]);
      rec["match"] = match;
    }
    if (format == OutputFormat::json) {
      rec["field"] = field.describe();
      rec["convention"] = to_string(c.convention);
    }
    records.push_back(std::move(rec));
  }
  if (c.emit == "divergences") columns = {"n", "recurrence", "oracle"};
  else columns = {"n", "a_n", "d_n", "oracle", "match"};

  if (format == OutputFormat::csv) out << field_header(field) << " convention=" << to_string(c.convention) << '\n';
  emit(records, columns, format, out);

  if (c.convention == Convention::corrected && mismatches > 0) {
    err << "error: corrected-convention moments disagree with direct evaluation at " << mismatches << " indices\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

std::string reproduce_line(const RunConfig& c, const VerifyOptions& o) {
  std::ostringstream s;
  s << "dickson4 verify --p " << c.p << " --e " << c.e;
  if (c.modulus) {
    s << " --modulus ";
    for (std::size_t i = 0; i < c.modulus->size(); ++i) s << (i ? "," : "") << (*c.modulus)[i];
  }
  s << " --n-max " << o.n_max;
  return s.str();
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const auto field = make_field(c);
  VerifyOptions options;
  if (!c.n_max.empty()) options.n_max = static_cast<std::uint64_t>(parse_decimal(c.n_max));
  out << field_header(field) << '\n';
  const auto results = run_verification(field, options);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
    if (!r.passed) {
      ok = false;
      out << "  reproduce: " << reproduce_line(c, options) << '\n';
    }
  }
  return ok ? kExitOk : kExitInconsistent;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::eval: return run_eval(c, out);
    case Command::coeffs: return run_coeffs(c, out);
    case Command::scan: return run_scan(c, out);
    case Command::moments: return run_moments(c, out, err);
    case Command::verify: return run_verify(c, out);
  }
  return kExitUsage;
}

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoll(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad modulus coefficient '" + item + "'");
    }
  }
  return out;
}

}  // namespace

void emit(const std::vector<Record>& records, const std::vector<std::string>& columns, OutputFormat format,
          std::ostream& sink) {
  if (format == OutputFormat::json) {
    for (const auto& r : records) sink << r.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) sink << (i ? "," : "") << columns[i];
  sink << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = r.find(columns[i]);
      sink << (i ? "," : "") << (it == r.end() ? std::string() : csv_cell(*it));
    }
    sink << '\n';
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.out_path.empty()) {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << config.out_path << " for writing\n";
        return kExitUsage;
      }
      const int status = dispatch(config, file, err);
      file.flush();
      if (!file) {
        err << "error: failed writing " << config.out_path << '\n';
        return kExitUsage;
      }
      return status;
    }
    return dispatch(config, out, err);
  } catch (const InternalInconsistency& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversed Dickson polynomials of the fourth kind over finite fields", "dickson4"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string modulus;
  std::string format;
  std::string convention = "corrected";

  auto add_field = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", cfg.p, "characteristic (prime > 3)");
    if (required) opt->required();
    sub->add_option("--e", cfg.e, "extension degree")->default_val(1);
    sub->add_option("--modulus", modulus, "monic modulus, comma-separated residues, constant first");
  };
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}))->default_val(def);
    sub->add_option("--out", cfg.out_path, "write output to this file");
  };

  auto* eval = app.add_subcommand("eval", "evaluate D_{n,3}(a, x)");
  add_field(eval, true);
  eval->add_option("--n", cfg.n, "degree (decimal)")->required();
  eval->add_option("--x", cfg.x, "point: residue or [c0,...,c_{e-1}]")->required();
  eval->add_option("--a", cfg.a, "parameter a (default 1)");
  add_format(eval, "text");

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficients of D_{n,k}(1, x) or f_n");
  coeffs->add_option("--n", cfg.n, "degree (decimal)")->required();
  coeffs->add_option("--kind", cfg.kind, "k in 0..3 (k = 3 is the fourth kind)")->default_val(3);
  coeffs->add_flag("--aux", cfg.aux, "auxiliary polynomial f_n instead (n even)");
  coeffs->add_option("--p", cfg.p, "reduce coefficients mod p");
  add_format(coeffs, "text");

  auto* scan = app.add_subcommand("scan", "run every permutation criterion over a range of n");
  add_field(scan, true);
  scan->add_option("--n-min", cfg.n_min, "first n")->default_val("0");
  scan->add_option("--n-max", cfg.n_max, "last n")->required();
  add_format(scan, "csv");

  auto* moments = app.add_subcommand("moments", "first-moment table or divergence list");
  add_field(moments, true);
  moments->add_option("--convention", convention, "constant convention")
      ->check(CLI::IsMember({"corrected", "as-printed"}))
      ->default_val("corrected");
  moments->add_option("--emit", cfg.emit, "table or divergences")
      ->check(CLI::IsMember({"table", "divergences"}))
      ->default_val("table");
  add_format(moments, "csv");

  auto* verify = app.add_subcommand("verify", "run the property suite on one field");
  add_field(verify, true);
  verify->add_option("--n-max", cfg.n_max, "largest n for evaluator checks (default 300)");
  verify->add_option("--out", cfg.out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (eval->parsed()) cfg.command = Command::eval;
  else if (coeffs->parsed()) cfg.command = Command::coeffs;
  else if (scan->parsed()) cfg.command = Command::scan;
  else if (moments->parsed()) cfg.command = Command::moments;
  else cfg.command = Command::verify;

  try {
    if (!modulus.empty()) cfg.modulus = parse_modulus(modulus);
    cfg.convention = parse_convention(convention);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (format == "csv") cfg.format = OutputFormat::csv;
  else if (format == "json") cfg.format = OutputFormat::json;
  else cfg.format = OutputFormat::text;

  return run(cfg, out, err);
}

}  // namespace dickson4
