#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverforge/errors.hpp"
#include "quiverforge/io.hpp"
#include "quiverforge/pipeline.hpp"

namespace py = pybind11;
using namespace quiverforge;
using io::json;

namespace {

AlgebraPtr algebra(const std::string& text) { return io::algebra_from_json(json::parse(text)); }

Representation module(const AlgebraPtr& a, const std::string& text) {
  return io::representation_from_json(a, json::parse(text));
}

std::string out(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_quiverforge, m) {
  m.doc() = "exact quiver representation computations (JSON in, JSON out)";
  static auto& certificate = py::register_exception<CertificateError>(m, "CertificateError", PyExc_RuntimeError);
  static auto& undecided = py::register_exception<UndecidedError>(m, "UndecidedError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const StageError& e) {
      if (e.cause() == StageError::Cause::certificate)
        py::set_error(certificate, e.what());
      else if (e.cause() == StageError::Cause::undecided)
        py::set_error(undecided, e.what());
      else
        PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidRepresentation& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("schema_version") = io::schema_version;

  m.def("hom_dim", [](const std::string& a, const std::string& x, const std::string& y) {
    const auto alg = algebra(a);
    return hom_dim(module(alg, x), module(alg, y));
  });
  m.def("ext1_dim", [](const std::string& a, const std::string& x, const std::string& y) {
    const auto alg = algebra(a);
    return ext1_dim(module(alg, x), module(alg, y));
  });
  m.def("euler_form", [](const std::string& a, const std::string& d, const std::string& e) {
    const auto alg = algebra(a);
    const auto& q = alg->quiver();
    return euler_form(*alg, io::dim_from_json(q, json::parse(d)), io::dim_from_json(q, json::parse(e)));
  });
  m.def("isotropic_root", [](const std::string& a) {
    const auto alg = algebra(a);
    return out(io::dim_to_json(alg->quiver(), find_isotropic_root(*alg)));
  });
  m.def(
      "is_stable",
      [](const std::string& a, const std::string& x, const std::string& theta, bool semistable_only) {
        const auto alg = algebra(a);
        const auto w = io::weight_from_json(alg->quiver(), json::parse(theta));
        const auto rep = module(alg, x);
        return out(io::to_json(alg->quiver(), semistable_only ? is_semistable(rep, w) : is_stable(rep, w)));
      },
      py::arg("algebra"), py::arg("module"), py::arg("theta"), py::arg("semistable_only") = false);
  m.def("effective_cone", [](const std::string& a, const std::string& d) {
    const auto alg = algebra(a);
    return out(io::to_json(alg->quiver(), effective_cone(alg, io::dim_from_json(alg->quiver(), json::parse(d)))));
  });
  m.def(
      "theorem11",
      [](const std::string& a, std::uint64_t seed) {
        PipelineOptions opt;
        opt.seed = seed;
        return out(io::to_json(build_bad_orbit_instance(algebra(a), opt)));
      },
      py::arg("algebra"), py::arg("seed") = 7);
  m.def("verify", [](const std::string& instance) {
    const auto inst = io::instance_from_json(json::parse(instance));
    return out(io::to_json(verify_instance(inst)));
  });
  m.def("zwara", [] { return out(io::to_json(zwara_module())); });
}
