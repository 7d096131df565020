#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieint/catalog.hpp"
#include "lieint/integrator.hpp"
#include "lieint/io.hpp"
#include "lieint/suite.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace lieint;

namespace {

SmoothPath make_path(std::function<Vec(double)> value) {
  SmoothPath p;
  p.value = std::move(value);
  return p;
}

} // namespace

PYBIND11_MODULE(_lieint, m) {
  m.doc() = "local Lie group representations: bch, chart factorization, "
            "logarithmic derivatives, and the exponential construction";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ChartOutOfRange>(m, "ChartOutOfRange");

  py::class_<LieAlgebra, std::shared_ptr<LieAlgebra>>(m, "LieAlgebra")
      .def(py::init([](const std::string &name,
                       const std::vector<std::string> &basis,
                       const std::vector<std::array<double, 4>> &brackets) {
             std::vector<BracketTerm> terms;
             for (const auto &b : brackets)
               terms.push_back({static_cast<int>(b[0]),
                                static_cast<int>(b[1]),
                                static_cast<int>(b[2]), b[3]});
             return std::make_shared<LieAlgebra>(name, basis, terms);
           }),
           py::arg("name"), py::arg("basis"), py::arg("brackets"))
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("name", &LieAlgebra::name)
      .def("bracket", &LieAlgebra::bracket)
      .def("adjoint", &LieAlgebra::adjoint)
      .def("exp_ad", &LieAlgebra::exp_ad)
      .def("basis_vector", &LieAlgebra::basis_vector)
      .def("validate", [](const LieAlgebra &L) {
        auto v = L.validate();
        return py::dict("pass"_a = v.pass,
                        "antisymmetry_residual"_a = v.antisymmetry_residual,
                        "jacobi_residual"_a = v.jacobi_residual,
                        "detail"_a = v.detail);
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("name", &Decomposition::name)
      .def_property_readonly("num_blocks", &Decomposition::num_blocks)
      .def("block", &Decomposition::block)
      .def("project", &Decomposition::project);

  py::class_<Representation>(m, "Representation")
      .def_property_readonly("name", &Representation::name)
      .def_property_readonly("dim_H", &Representation::dim_H)
      .def_property_readonly("skew", &Representation::skew)
      .def_property_readonly("matrices", &Representation::matrices)
      .def("apply", &Representation::apply)
      .def("exp_op", &Representation::exp_op)
      .def("validate", [](const Representation &R) {
        auto v = R.validate();
        return py::dict("pass"_a = v.pass,
                        "homomorphism_residual"_a = v.homomorphism_residual,
                        "skew_residual"_a = v.skew_residual);
      });

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_property_readonly("algebra",
                             [](const CatalogEntry &e) {
                               return std::const_pointer_cast<LieAlgebra>(
                                   e.algebra);
                             })
      .def_readonly("decompositions", &CatalogEntry::decompositions)
      .def_readonly("representations", &CatalogEntry::representations)
      .def_readonly("notes", &CatalogEntry::notes)
      .def("decomposition", &CatalogEntry::decomposition)
      .def("representation", &CatalogEntry::representation);

  py::class_<ChartPoint>(m, "ChartPoint")
      .def_readonly("components", &ChartPoint::components)
      .def_readonly("residual", &ChartPoint::residual);

  py::class_<BchConfig>(m, "BchConfig")
      .def(py::init<>())
      .def_readwrite("max_order", &BchConfig::max_order)
      .def_readwrite("term_tolerance", &BchConfig::term_tolerance)
      .def_readwrite("domain_radius", &BchConfig::domain_radius);

  py::class_<NewtonConfig>(m, "NewtonConfig")
      .def(py::init<>())
      .def_readwrite("max_iter", &NewtonConfig::max_iter)
      .def_readwrite("residual_tol", &NewtonConfig::residual_tol)
      .def_readwrite("domain_radius", &NewtonConfig::domain_radius);

  py::class_<LocalRepresentation>(m, "LocalRepresentation")
      .def(py::init<Representation, Decomposition, BchConfig, NewtonConfig>(),
           py::arg("rep"), py::arg("decomposition"),
           py::arg("bch_config") = BchConfig{},
           py::arg("newton_config") = NewtonConfig{})
      .def("pi", &LocalRepresentation::pi);

  m.def(
      "bch",
      [](const std::shared_ptr<LieAlgebra> &L, const Vec &x, const Vec &y,
         const BchConfig &cfg) { return bch(*L, x, y, cfg); },
      py::arg("algebra"), py::arg("x"), py::arg("y"),
      py::arg("config") = BchConfig{});
  m.def(
      "bch_multi",
      [](const std::shared_ptr<LieAlgebra> &L, const std::vector<Vec> &xs,
         const BchConfig &cfg) { return bch_multi(*L, xs, cfg); },
      py::arg("algebra"), py::arg("xs"), py::arg("config") = BchConfig{});
  m.def(
      "factorize",
      [](const std::shared_ptr<LieAlgebra> &L, const Decomposition &D, const Vec &z) {
        return factorize(*L, D, z);
      },
      py::arg("algebra"), py::arg("decomposition"), py::arg("z"));
  m.def(
      "log_derivative",
      [](const std::shared_ptr<LieAlgebra> &L, std::function<Vec(double)> path, double t,
         int quad_order) {
        GaussLegendre quad(quad_order);
        return log_derivative(*L, make_path(std::move(path)), t, quad);
      },
      py::arg("algebra"), py::arg("path"), py::arg("t"),
      py::arg("quadrature_order") = 16);
  m.def("commutation_residual", &commutation_residual, py::arg("rep"),
        py::arg("x"), py::arg("y"));
  m.def("multiplicativity_residual", &multiplicativity_residual,
        py::arg("local_rep"), py::arg("x"), py::arg("y"));
  m.def("load_catalog", &load_catalog);
  m.def(
      "find_entry",
      [](const std::string &name) { return find_entry(load_catalog(), name); },
      py::arg("name"));
  m.def(
      "run_suite",
      [](const CatalogEntry &entry, std::uint64_t seed,
         const std::string &level) {
        VerificationReport r = run_suite(
            entry, seed,
            level == "full" ? SuiteLevel::full : SuiteLevel::quick);
        return py::module_::import("json").attr("loads")(
            r.to_json().dump());
      },
      py::arg("entry"), py::arg("seed") = 0, py::arg("level") = "quick");
  m.def(
      "load_algebra_file",
      [](const std::string &path) {
        AlgebraFile f = load_algebra_file(path);
        return py::make_tuple(std::const_pointer_cast<LieAlgebra>(f.algebra),
                              f.decomposition);
      },
      py::arg("path"));
}
