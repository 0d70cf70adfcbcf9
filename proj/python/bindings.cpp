#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupft/documents.hpp"
#include "groupft/theorems.hpp"

namespace py = pybind11;
using namespace groupft;

namespace {

template <GroupBackend G>
OperatorField field_from_list(const G& g, const std::vector<CMatrix>& mats) {
  if (mats.size() != g.dual_size()) throw DimensionError("expected one matrix per dual item");
  OperatorField field;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (static_cast<std::size_t>(mats[k].rows()) != g.irrep_dim(k) ||
        static_cast<std::size_t>(mats[k].cols()) != g.irrep_dim(k)) {
      throw DimensionError("matrix " + std::to_string(k) + " does not match the irrep dimension");
    }
    field.entries.push_back({k, g.plancherel_weight(k), mats[k]});
  }
  return field;
}

std::vector<CMatrix> to_list(const OperatorField& field) {
  std::vector<CMatrix> out;
  for (const auto& e : field.entries) out.push_back(e.matrix);
  return out;
}

HPoint to_point(const std::array<double, 3>& p) { return {p[0], p[1], p[2]}; }

// Operations shared by both backends, bound once per class.
template <GroupBackend G, class Cls>
void bind_common(Cls& cls) {
  cls.def_property_readonly("haar_size", &G::haar_size)
      .def_property_readonly("dual_size", &G::dual_size)
      .def("irrep_dim", &G::irrep_dim)
      .def("irrep_label", &G::irrep_label)
      .def("plancherel_weight", &G::plancherel_weight)
      .def("describe", [](const G& g) { return g.describe().dump(); })
      .def(
          "fourier",
          [](const G& g, const std::vector<Complex>& values) {
            return to_list(fourier_function(GroupFunction<G>(g, values)));
          },
          py::arg("values"), "Transform of a function given on the Haar points.")
      .def(
          "invert_on_haar",
          [](const G& g, const std::vector<CMatrix>& mats) {
            const auto f = invert_on_haar(g, field_from_list(g, mats));
            return std::vector<Complex>(f.values().begin(), f.values().end());
          },
          py::arg("matrices"))
      .def(
          "plancherel_norm_sq",
          [](const G& g, const std::vector<CMatrix>& mats) { return plancherel_norm_sq(field_from_list(g, mats)); },
          py::arg("matrices"))
      .def(
          "trace_class_norm",
          [](const G& g, const std::vector<CMatrix>& mats) { return trace_class_norm(field_from_list(g, mats)); },
          py::arg("matrices"))
      .def(
          "run_suite",
          [](const G& g, const std::string& suite, std::uint64_t seed, std::size_t trials, std::optional<double> tol) {
            SuiteOptions o;
            o.seed = seed;
            o.trials = trials;
            o.tol = tol;
            return to_json(run_suite(g, suite, o)).dump();
          },
          py::arg("suite") = "all", py::arg("seed") = 1, py::arg("trials") = 100, py::arg("tol") = py::none(),
          "Runs a verification suite and returns the report document as a JSON string.");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operator-valued group Fourier transform on finite groups and the Heisenberg group.";

  py::register_exception<Error>(m, "GroupftError", PyExc_ValueError);

  m.def("singular_values", [](const CMatrix& a) { return singular_values(a).values; });
  m.def("schatten_norm", py::overload_cast<const CMatrix&, double>(&schatten_norm), py::arg("a"), py::arg("p"));
  m.def("operator_norm", &operator_norm);

  py::class_<FiniteGroup> finite(m, "FiniteGroup");
  finite.def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("evaluate", [](const FiniteGroup& g, std::size_t k, std::size_t p) {
        if (k >= g.dual_size()) throw DimensionError("irrep index out of range");
        g.check_element(p);
        return CMatrix(g.evaluate(k, p));
      })
      .def("invert",
           [](const FiniteGroup& g, const std::vector<CMatrix>& mats, std::size_t p) {
             g.check_element(p);
             return invert(g, field_from_list(g, mats), p);
           })
      .def("validate", [](const FiniteGroup& g) { return to_json(validate_group(g)).dump(); })
      .def("to_spec", &save_group)
      .def(
          "difference_set",
          [](const FiniteGroup& g, const std::vector<std::size_t>& set) {
            const auto m = indicator_measure(g, set);
            const auto r = analyze_difference_set(m);
            json doc = to_json(g, r);
            doc["check"] = to_json(assess_difference_report(g, m, r, default_tolerances(g)));
            return py::make_tuple(doc.dump(), r.density);
          },
          py::arg("elements"), "Difference-set report (JSON string) and the density at every element.");
  bind_common<FiniteGroup>(finite);

  m.def("builtin_group", &builtin_group, py::arg("name"));
  m.def("load_group", &load_group, py::arg("document"));
  m.def("cyclic", &gen_cyclic);
  m.def("dihedral", &gen_dihedral);
  m.def("finite_heisenberg", &gen_finite_heisenberg);
  m.def("direct_product", &direct_product);

  py::class_<HeisenbergConfig>(m, "HeisenbergConfig")
      .def(py::init<>())
      .def_readwrite("grid_n", &HeisenbergConfig::grid_n)
      .def_readwrite("half_width", &HeisenbergConfig::half_width)
      .def_readwrite("lambda_min", &HeisenbergConfig::lambda_min)
      .def_readwrite("lambda_max", &HeisenbergConfig::lambda_max)
      .def_readwrite("lambda_nodes", &HeisenbergConfig::lambda_nodes)
      .def_readwrite("x_step", &HeisenbergConfig::x_step)
      .def_readwrite("t_step", &HeisenbergConfig::t_step)
      .def_readwrite("x_extent", &HeisenbergConfig::x_extent)
      .def_readwrite("y_extent", &HeisenbergConfig::y_extent)
      .def_readwrite("t_extent", &HeisenbergConfig::t_extent)
      .def("to_json", [](const HeisenbergConfig& c) { return c.to_json().dump(); });

  py::class_<HeisenbergGroup> heis(m, "HeisenbergGroup");
  heis.def(py::init<HeisenbergConfig>(), py::arg("config") = HeisenbergConfig{})
      .def("haar_point",
           [](const HeisenbergGroup& g, std::size_t i) {
             if (i >= g.haar_size()) throw DimensionError("Haar index out of range");
             const HPoint p = g.haar_point(i);
             return std::array<double, 3>{p.x, p.y, p.t};
           })
      .def("lambda_of", [](const HeisenbergGroup& g, std::size_t k) {
        if (k >= g.dual_size()) throw DimensionError("dual index out of range");
        return g.rep(k).lambda();
      })
      .def("evaluate",
           [](const HeisenbergGroup& g, std::size_t k, const std::array<double, 3>& p) {
             if (k >= g.dual_size()) throw DimensionError("dual index out of range");
             return g.evaluate(k, to_point(p));
           })
      .def("invert",
           [](const HeisenbergGroup& g, const std::vector<CMatrix>& mats, const std::array<double, 3>& p) {
             return invert(g, field_from_list(g, mats), to_point(p));
           })
      .def("validate", [](const HeisenbergGroup& g) { return to_json(validate_group(g)).dump(); })
      .def(
          "difference_box",
          [](const HeisenbergGroup& g, const std::array<double, 3>& lo, const std::array<double, 3>& hi) {
            const auto m = box_measure(g, to_point(lo), to_point(hi));
            const auto r = analyze_difference_set(m);
            json doc = to_json(g, r);
            doc["check"] = to_json(assess_difference_report(g, m, r, default_tolerances(g)));
            return py::make_tuple(doc.dump(), r.density);
          },
          py::arg("lo"), py::arg("hi"));
  bind_common<HeisenbergGroup>(heis);

  m.def("hgroup_multiply", [](const std::array<double, 3>& p, const std::array<double, 3>& q) {
    const HPoint r = hgroup_multiply(to_point(p), to_point(q));
    return std::array<double, 3>{r.x, r.y, r.t};
  });
}
