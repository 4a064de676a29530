#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fqfrieze/cli.hpp"
#include "fqfrieze/errors.hpp"
#include "fqfrieze/formulas.hpp"
#include "fqfrieze/frieze.hpp"
#include "fqfrieze/moduli.hpp"
#include "fqfrieze/partitions.hpp"
#include "fqfrieze/search.hpp"

namespace py = pybind11;
using namespace fqfrieze;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Tuple to_tuple(const Field& f, const std::vector<long long>& codes) {
  Tuple t;
  for (long long c : codes) t.push_back(f.from_code(c));
  return t;
}

std::vector<std::uint32_t> codes(std::span<const FieldElement> t) {
  std::vector<std::uint32_t> out;
  for (FieldElement e : t) out.push_back(e.code);
  return out;
}

std::vector<std::string> point_strings(const Configuration& c) {
  std::vector<std::string> out;
  for (const auto& p : c.points) out.push_back(format_point(c.field, p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_fqfrieze, m) {
  m.doc() = "Tame friezes over finite fields";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("field_order", [](const std::string& field) { return Field::parse(field).order(); });

  m.def("count_friezes", [](const py::int_& q, bool char_is_2, int w) {
    return to_py(count_friezes(from_py(q), char_is_2, w));
  }, py::arg("q"), py::arg("char_is_2"), py::arg("w"));
  m.def("count_configurations", [](const py::int_& q, int n) {
    return to_py(count_configurations(from_py(q), n));
  }, py::arg("q"), py::arg("n"));
  m.def("count_moduli", [](const py::int_& q, int n) {
    return to_py(count_moduli(from_py(q), n));
  }, py::arg("q"), py::arg("n"));
  m.def("count_moduli_plus", [](const py::int_& q, bool char_is_2, int m_) {
    return to_py(count_moduli_plus(from_py(q), char_is_2, m_));
  }, py::arg("q"), py::arg("char_is_2"), py::arg("m"));

  m.def("matrix_criterion", [](const std::string& field, const std::vector<long long>& row) {
    const Field f = Field::parse(field);
    return matrix_criterion(f, to_tuple(f, row)).holds;
  }, py::arg("field"), py::arg("row"));

  m.def("frieze_rows", [](const std::string& field, const std::vector<long long>& row) {
    const Field f = Field::parse(field);
    const Frieze fr = build_frieze(make_first_row(f, to_tuple(f, row)));
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& r : fr.rows()) out.push_back(codes(r));
    return out;
  }, py::arg("field"), py::arg("row"), "Rows -1..w+2 over one period.");

  m.def("render_frieze", [](const std::string& field, const std::vector<long long>& row,
                            const std::string& format) {
    const Field f = Field::parse(field);
    const Frieze fr = build_frieze(make_first_row(f, to_tuple(f, row)));
    return render_frieze(fr, format == "json" ? RenderFormat::json : RenderFormat::text);
  }, py::arg("field"), py::arg("row"), py::arg("format") = "text");

  m.def("enumerate_friezes", [](const std::string& field, int width, const std::string& strategy,
                                int workers, std::optional<double> budget) {
    const Field f = Field::parse(field);
    SearchOptions o;
    o.strategy = parse_strategy(strategy);
    o.workers = workers;
    if (budget) o.budget = *budget;
    std::optional<EnumerationResult> found;
    {
      py::gil_scoped_release release;
      found.emplace(enumerate_friezes(f, width, o));
    }
    const EnumerationResult& r = *found;
    py::dict d;
    d["count"] = r.total_count;
    py::list orbits;
    for (const auto& e : r.orbits) orbits.append(py::make_tuple(codes(e.rep), e.size));
    d["orbits"] = orbits;
    py::list tuples;
    for (const auto& t : r.tuples) tuples.append(codes(t));
    d["tuples"] = tuples;
    d["tuples_complete"] = r.tuples_complete;
    return d;
  }, py::arg("field"), py::arg("width"), py::arg("strategy") = "mitm", py::arg("workers") = 1,
     py::arg("budget") = py::none());

  m.def("moduli_orbits", [](const std::string& field, int n, const std::string& sign, int workers) {
    const Field f = Field::parse(field);
    ModuliOptions o;
    o.workers = workers;
    OrbitReport r;
    {
      py::gil_scoped_release release;
      r = pgl2_orbits(f, n, parse_sign_filter(sign), o);
    }
    return py::make_tuple(r.configurations, r.orbit_count);
  }, py::arg("field"), py::arg("n"), py::arg("sign") = "all", py::arg("workers") = 1,
     "(configurations, orbits) for C_n, or its plus or minus part.");

  m.def("configuration_to_frieze", [](const std::string& field, const std::string& points)
            -> std::optional<std::vector<std::uint32_t>> {
    const Field f = Field::parse(field);
    auto r = configuration_to_frieze(parse_configuration(f, points));
    if (auto* row = std::get_if<FirstRow>(&r)) return codes(row->entries);
    return std::nullopt;
  }, py::arg("field"), py::arg("points"));

  m.def("frieze_to_configuration", [](const std::string& field, const std::vector<long long>& row)
            -> std::optional<std::vector<std::string>> {
    const Field f = Field::parse(field);
    auto r = frieze_to_configuration(make_first_row(f, to_tuple(f, row)));
    if (auto* c = std::get_if<Configuration>(&r)) return point_strings(*c);
    return std::nullopt;
  }, py::arg("field"), py::arg("row"));

  m.def("a_kn", [](int k, int n) { return to_py(a_kn_closed_form(k, n)); }, py::arg("k"),
        py::arg("n"));
  m.def("count_cyclic_partitions", &count_cyclic_partitions, py::arg("n"), py::arg("k"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Returns (exit code, stdout, stderr).");
}
