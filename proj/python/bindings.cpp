#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dickson4/cli.hpp"
#include "dickson4/dickson.hpp"
#include "dickson4/errors.hpp"
#include "dickson4/moments.hpp"
#include "dickson4/permutation.hpp"
#include "dickson4/quad_ext.hpp"
#include "dickson4/verify.hpp"

namespace py = pybind11;
using namespace dickson4;

namespace {

// Python ints of any size cross the boundary as decimal strings.
BigInt to_bigint(const py::object& n) {
  if (py::isinstance<py::str>(n)) return parse_decimal(n.cast<std::string>());
  return parse_decimal(py::str(py::int_(n)).cast<std::string>());
}

py::int_ to_pyint(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

FqElem to_elem(const FieldCtx& f, const py::object& x) {
  if (py::isinstance<py::str>(x)) return f.parse(x.cast<std::string>());
  if (py::isinstance<py::int_>(x)) return f.from_bigint(to_bigint(x));
  std::vector<std::int64_t> coeffs;
  for (auto c : x) coeffs.push_back(c.cast<std::int64_t>());
  return f.from_coeffs(coeffs);
}

py::object from_elem(const FqElem& x) {
  if (x.in_prime_field()) return py::int_(x[0]);
  py::list out;
  for (auto c : x.coeffs()) out.append(c);
  return std::move(out);
}

py::list big_list(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& c : v) out.append(to_pyint(c));
  return out;
}

py::dict report_dict(const PPReport& r) {
  py::dict d;
  d["q"] = r.q;
  d["n"] = to_pyint(r.n);
  d["direct"] = r.direct;
  d["hermite"] = r.hermite;
  d["mod6"] = r.mod6_necessary;
  d["two_to_one"] = r.two_to_one;
  d["aux_equiv"] = r.aux_equiv ? py::object(py::bool_(*r.aux_equiv)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversed Dickson polynomials of the fourth kind over finite fields";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<InternalInconsistency> inconsistency(m, "InternalInconsistency", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InternalInconsistency& e) {
      inconsistency(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<FieldCtx>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus) {
             return FieldCtx::construct(p, e, std::move(modulus));
           }),
           py::arg("p"), py::arg("e") = 1, py::arg("modulus") = py::none())
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("e", &FieldCtx::degree)
      .def_property_readonly("q", &FieldCtx::order)
      .def_property_readonly("modulus", [](const FieldCtx& f) { return f.spec().modulus; })
      .def("describe", &FieldCtx::describe)
      .def("elements", [](const FieldCtx& f) {
        py::list out;
        for (const auto& x : f.elements()) out.append(from_elem(x));
        return out;
      })
      .def("sqrt", [](const FieldCtx& f, const py::object& x) -> py::object {
        const auto r = f.sqrt_opt(to_elem(f, x));
        return r ? from_elem(*r) : py::none();
      })
      .def("__repr__", [](const FieldCtx& f) { return "Field(" + f.describe() + ")"; });

  m.def(
      "evaluate",
      [](const FieldCtx& f, const py::object& n, const py::object& x, const py::object& a) {
        const auto nn = to_bigint(n);
        const auto xx = to_elem(f, x);
        if (a.is_none()) return from_elem(rdp4_eval_recursive(f, nn, xx));
        return from_elem(rdp_eval_param(f, nn, to_elem(f, a), xx));
      },
      py::arg("field"), py::arg("n"), py::arg("x"), py::arg("a") = py::none(),
      "D_{n,3}(a, x) over the field; a defaults to 1.");

  m.def(
      "evaluate_closed",
      [](const FieldCtx& f, const py::object& n, const py::object& x) {
        return from_elem(rdp4_eval_closed(QuadExtCtx(f), to_bigint(n), to_elem(f, x)));
      },
      py::arg("field"), py::arg("n"), py::arg("x"));

  m.def(
      "coefficients",
      [](const py::object& n, int kind) { return big_list(rdp_coeffs_exact(to_bigint(n), kind)); },
      py::arg("n"), py::arg("kind") = kFourthKind, "Exact integer coefficients of D_{n,k}(1, x), constant first.");

  m.def(
      "aux_coefficients", [](const py::object& n) { return big_list(aux_poly(to_bigint(n)).coeffs); }, py::arg("n"));

  m.def(
      "pp_report", [](const FieldCtx& f, const py::object& n) { return report_dict(pp_report(QuadExtCtx(f), to_bigint(n))); },
      py::arg("field"), py::arg("n"));

  m.def(
      "pp_scan",
      [](const FieldCtx& f, const py::object& n_min, const py::object& n_max) {
        py::list out;
        for (const auto& r : pp_scan(QuadExtCtx(f), to_bigint(n_min), to_bigint(n_max))) out.append(report_dict(r));
        return out;
      },
      py::arg("field"), py::arg("n_min"), py::arg("n_max"));

  m.def(
      "moment_table",
      [](const FieldCtx& f, const std::string& convention) {
        const auto t = moment_table(f, parse_convention(convention));
        py::dict d;
        d["q"] = t.q;
        d["p"] = t.p;
        d["convention"] = to_string(t.convention);
        d["b"] = t.b;
        d["c"] = t.c;
        d["d"] = t.d;
        d["a"] = t.a;
        return d;
      },
      py::arg("field"), py::arg("convention") = "corrected");

  m.def(
      "moment_divergences",
      [](const FieldCtx& f, const std::string& convention) {
        py::list out;
        for (const auto& d : verify_moments(f, parse_convention(convention)))
          out.append(py::make_tuple(d.n, d.recurrence, from_elem(d.oracle)));
        return out;
      },
      py::arg("field"), py::arg("convention") = "corrected");

  m.def(
      "first_moment", [](const FieldCtx& f, std::uint64_t n) { return from_elem(first_moment_bruteforce(f, n)); },
      py::arg("field"), py::arg("n"));

  m.def(
      "verify",
      [](const FieldCtx& f, std::uint64_t n_max) {
        VerifyOptions options;
        options.n_max = n_max;
        py::list out;
        for (const auto& r : run_verification(f, options)) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("field"), py::arg("n_max") = 300);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"dickson4"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
