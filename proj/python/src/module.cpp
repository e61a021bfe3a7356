#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hwcat/corpus.hpp"
#include "hwcat/indlab.hpp"
#include "hwcat/io.hpp"
#include "hwcat/order_engine.hpp"
#include "hwcat/report.hpp"

namespace py = pybind11;
using namespace hwcat;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<FieldCtx> parse_field(const std::optional<std::string>& f) {
  if (!f) return std::nullopt;
  return FieldCtx::parse(*f);
}

io::AlgebraDocument random_document(std::uint64_t seed, bool dual, const std::optional<std::string>& field) {
  const auto ctx = parse_field(field).value_or(FieldCtx::rationals());
  auto r = dual ? corpus::random_dual_algebra(seed, ctx) : corpus::random_algebra(seed, ctx);
  io::AlgebraDocument doc;
  doc.name = (dual ? "random-dual-" : "random-") + std::to_string(seed);
  doc.field = ctx;
  doc.quiver = r.quiver;
  doc.relations = r.relations;
  doc.algebra = r.algebra;
  return doc;
}

WeightOrder order_for(const io::AlgebraDocument& doc, const std::optional<std::string>& order) {
  return report::resolve_order(doc, order);
}

// Negative verdicts are outcomes with exit code 1, as on the command line.
template <class F>
report::Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const NotHighestWeight& e) {
    return report::error_outcome("not a highest weight category", e.what(), report::kNegative);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Highest weight structures on bound quiver algebras";
  m.attr("SCHEMA_VERSION") = report::kSchemaVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<io::AlgebraDocument>(m, "Document")
      .def_static(
          "from_json", [](const std::string& text, std::optional<std::string> field) { return io::parse_algebra_document(text, parse_field(field)); },
          py::arg("text"), py::arg("field") = py::none())
      .def_static(
          "load", [](const std::string& path, std::optional<std::string> field) { return io::load_algebra_document(path, parse_field(field)); },
          py::arg("path"), py::arg("field") = py::none())
      .def_static("random", &random_document, py::arg("seed"), py::arg("dual") = false, py::arg("field") = py::none())
      .def_readonly("name", &io::AlgebraDocument::name)
      .def_property_readonly("field", [](const io::AlgebraDocument& d) { return d.field.to_string(); })
      .def_property_readonly("vertices", [](const io::AlgebraDocument& d) { return d.quiver.vertices; })
      .def_property_readonly("dim", [](const io::AlgebraDocument& d) { return d.algebra->dim(); })
      .def_property_readonly("has_duality", [](const io::AlgebraDocument& d) { return d.algebra->duality().has_value(); })
      .def_readonly("order", &io::AlgebraDocument::order)
      .def("to_json", &io::dump_algebra_document)
      .def("__repr__", [](const io::AlgebraDocument& d) {
        return "<Document " + (d.name.empty() ? std::string("unnamed") : d.name) + " dim=" + std::to_string(d.algebra->dim()) + ">";
      });

  py::class_<report::Outcome>(m, "Outcome")
      .def_property_readonly("result", [](const report::Outcome& o) { return to_python(o.result); })
      .def_readonly("text", &report::Outcome::text)
      .def_readonly("exit_code", &report::Outcome::exit_code)
      .def_property_readonly("ok", [](const report::Outcome& o) { return o.exit_code == report::kOk; })
      .def(
          "envelope",
          [](const report::Outcome& o, const std::string& command, py::object input) {
            auto in = nlohmann::json::parse(py::module_::import("json").attr("dumps")(input).cast<std::string>());
            return to_python(report::envelope(command, in, o));
          },
          py::arg("command"), py::arg("input") = py::dict())
      .def("__repr__", [](const report::Outcome& o) { return "<Outcome exit_code=" + std::to_string(o.exit_code) + ">"; });

  using Opt = std::optional<std::string>;
  m.def(
      "check", [](const io::AlgebraDocument& d, Opt order, bool all_ideals) { return report::check(d, order_for(d, order), all_ideals); },
      py::arg("doc"), py::arg("order") = py::none(), py::arg("all_ideals") = false);
  m.def(
      "essential_order", [](const io::AlgebraDocument& d, Opt order) { return report::essential_order(d, order_for(d, order)); },
      py::arg("doc"), py::arg("order") = py::none());
  m.def("enumerate", &report::enumerate, py::arg("doc"));
  m.def(
      "reconstruct", [](const io::AlgebraDocument& d) { return guarded([&] { return report::reconstruct(d); }); }, py::arg("doc"));
  m.def(
      "tilting", [](const io::AlgebraDocument& d, Opt order) { return report::tilting(d, order_for(d, order)); }, py::arg("doc"),
      py::arg("order") = py::none());
  m.def(
      "bgg", [](const io::AlgebraDocument& d, Opt order) { return report::bgg(d, order_for(d, order)); }, py::arg("doc"),
      py::arg("order") = py::none());
  m.def(
      "fullness",
      [](const io::AlgebraDocument& d, Opt order, Opt omega, std::optional<std::size_t> depth) {
        return report::fullness(d, order_for(d, order), omega, depth);
      },
      py::arg("doc"), py::arg("order") = py::none(), py::arg("omega") = py::none(), py::arg("depth") = py::none());
  m.def(
      "ext",
      [](const io::AlgebraDocument& d, const std::string& from, const std::string& to, Opt order, std::size_t depth) {
        return report::ext(d, order_for(d, order), from, to, depth);
      },
      py::arg("doc"), py::arg("source"), py::arg("target"), py::arg("order") = py::none(), py::arg("depth") = 3);
  m.def("weyl", &report::weyl, py::arg("type"), py::arg("p"), py::arg("maxlen") = 6);
  m.def(
      "indlab",
      [](std::size_t i_max, std::size_t mm, Opt field) { return report::indlab(i_max, mm, parse_field(field).value_or(FieldCtx::prime(101))); },
      py::arg("imax") = 8, py::arg("m") = 10, py::arg("field") = py::none());

  m.def(
      "ext1_jordan",
      [](std::size_t i, const std::vector<std::size_t>& sizes, Opt field) {
        return indlab::ext1_nilpotent(i, sizes, parse_field(field).value_or(FieldCtx::rationals())).value();
      },
      py::arg("i"), py::arg("sizes"), py::arg("field") = py::none());
  m.def(
      "k_cokernel_dim",
      [](std::size_t i, std::size_t mm, Opt field) { return indlab::k_cokernel_dim(i, mm, parse_field(field).value_or(FieldCtx::rationals())); },
      py::arg("i"), py::arg("m"), py::arg("field") = py::none());
}
