#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shacldl/dsl.hpp"
#include "shacldl/errors.hpp"
#include "shacldl/graph_text.hpp"
#include "shacldl/natural.hpp"
#include "shacldl/reference.hpp"
#include "shacldl/shacl_import.hpp"

namespace py = pybind11;
using namespace shacldl;

namespace {

GraphFormat format_from(const std::string& name) {
    if (name == "ntriples") return GraphFormat::NTriples;
    if (name == "facts") return GraphFormat::SimpleFacts;
    throw py::value_error("unknown graph format: " + name + " (use 'ntriples' or 'facts')");
}

py::dict report_to_dict(const ConformanceReport& report) {
    py::dict out;
    out["conforms"] = report.conforms;
    py::list violations;
    for (const auto& v : report.violations) {
        py::dict item;
        item["target"] = v.target_index;
        item["focus"] = v.focus.text();
        item["lhs"] = serialize_shape(*v.lhs);
        item["rhs"] = serialize_shape(*v.rhs);
        violations.append(item);
    }
    out["violations"] = violations;
    return out;
}

}  // namespace

PYBIND11_MODULE(_shacldl, m) {
    m.doc() = "Shape-schema validation over graphs, natural semantics";

    py::class_<Graph>(m, "Graph")
        .def("__len__", [](const Graph& g) { return g.facts().size(); })
        .def("nodes", [](const Graph& g) {
            py::list out;
            for (const auto& n : g.nodes()) out.append(n.text);
            return out;
        });

    py::class_<ShapeSchema>(m, "Schema")
        .def("__str__", [](const ShapeSchema& s) { return serialize_schema(s); });

    m.def("parse_graph",
          [](const std::string& text, const std::string& fmt) {
              return parse_graph(text, format_from(fmt));
          },
          py::arg("text"), py::arg("format") = "facts");

    m.def("parse_schema", [](const std::string& text) { return parse_schema(text); },
          py::arg("text"));

    m.def("import_shacl",
          [](const std::string& text) { return import_shapes_graph(text); }, py::arg("text"));

    m.def("serialize_schema",
          [](const ShapeSchema& s) { return serialize_schema(s); }, py::arg("schema"));

    m.def("validate",
          [](const Graph& g, const ShapeSchema& s) { return report_to_dict(validate(g, s)); },
          py::arg("graph"), py::arg("schema"));

    m.def("eval_shape",
          [](const std::string& shape, const Graph& g, const std::vector<std::string>& nodes) {
              std::vector<Name> query;
              for (const auto& n : nodes) query.push_back(node_name(n));
              auto r = eval_on_graph(parse_shape_expr(shape), g, ShapeSchema{}, query);
              py::dict answers;
              for (const auto& [n, v] : r.answers) answers[py::str(n.text)] = v;
              return py::make_tuple(answers, r.star_verdict);
          },
          py::arg("shape"), py::arg("graph"), py::arg("nodes"));

    m.def("diff_semantics",
          [](const Graph& g, const ShapeSchema& s) {
              py::list out;
              for (const auto& d : diff_semantics(g, s)) {
                  py::dict item;
                  item["target"] = d.target_index;
                  item["natural_conforms"] = d.natural_conforms;
                  item["active_conforms"] = d.active_conforms;
                  item["witness"] =
                      d.witness ? py::object(py::str(d.witness->text())) : py::object(py::none());
                  out.append(item);
              }
              return out;
          },
          py::arg("graph"), py::arg("schema"));

    m.def("check_theorem1",
          [](const Graph& g, const ShapeSchema& s, int max_fresh) {
              auto r = check_theorem1(g, s, max_fresh);
              return py::make_tuple(r.passed, r.evidence);
          },
          py::arg("graph"), py::arg("schema"), py::arg("max_fresh") = 3);

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CyclicSchema>(m, "CyclicSchemaError", PyExc_ValueError);
    py::register_exception<UnsupportedConstruct>(m, "UnsupportedConstructError",
                                                 PyExc_ValueError);
}
