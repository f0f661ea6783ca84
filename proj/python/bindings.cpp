#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qnr/concentration.hpp"
#include "qnr/driver.hpp"
#include "qnr/error.hpp"
#include "qnr/io.hpp"
#include "qnr/zoo.hpp"

namespace py = pybind11;

namespace {

// Point clouds cross the boundary as a pair of complex arrays.
py::tuple cloud_arrays(const qnr::PointCloud& cloud) {
  const auto n = static_cast<Eigen::Index>(cloud.size());
  return py::make_tuple(qnr::ComplexVector(Eigen::Map<const qnr::ComplexVector>(cloud.W.data(), n)),
                        qnr::ComplexVector(Eigen::Map<const qnr::ComplexVector>(cloud.W_tilde.data(), n)));
}

std::optional<qnr::Seconds> seconds(std::optional<double> s) {
  if (!s) return std::nullopt;
  return qnr::Seconds(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quadratic numerical range of 2x2 block matrices";

  auto base = py::register_exception<qnr::Error>(m, "QnrError");
  py::register_exception<qnr::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<qnr::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<qnr::SplitOutOfRange>(m, "SplitOutOfRange", base.ptr());
  py::register_exception<qnr::EmptySet>(m, "EmptySet", base.ptr());
  py::register_exception<qnr::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<qnr::IoError>(m, "IoError", base.ptr());

  py::class_<qnr::BlockMatrix>(m, "BlockMatrix")
      .def(py::init<qnr::ComplexMatrix, qnr::ComplexMatrix, qnr::ComplexMatrix, qnr::ComplexMatrix>(), py::arg("A"),
           py::arg("B"), py::arg("C"), py::arg("D"))
      .def_static("split", &qnr::BlockMatrix::split, py::arg("matrix"), py::arg("split"))
      .def_property_readonly("A", &qnr::BlockMatrix::A)
      .def_property_readonly("B", &qnr::BlockMatrix::B)
      .def_property_readonly("C", &qnr::BlockMatrix::C)
      .def_property_readonly("D", &qnr::BlockMatrix::D)
      .def_property_readonly("n1", &qnr::BlockMatrix::n1)
      .def_property_readonly("n2", &qnr::BlockMatrix::n2)
      .def_property_readonly("dim", &qnr::BlockMatrix::dim)
      .def("assemble", [](const qnr::BlockMatrix& b) { return qnr::assemble(b); })
      .def("__repr__", [](const qnr::BlockMatrix& b) {
        return "<BlockMatrix n1=" + std::to_string(b.n1()) + " n2=" + std::to_string(b.n2()) + ">";
      });

  m.def("generate", &qnr::generate, py::arg("name"), py::arg("dim") = 0,
        "Built-in example matrix a1..a5; dim is the total dimension for a1 and a5.");
  m.def("load_block_matrix", &qnr::load_block_matrix, py::arg("path"), py::arg("split") = py::none());
  m.def("matrix_to_json", &qnr::matrix_to_json);

  m.def("reduce",
        [](const qnr::BlockMatrix& b, const qnr::ComplexVector& x, const qnr::ComplexVector& y) {
          return qnr::reduce(b, qnr::UnitPair(x, y)).matrix();
        },
        py::arg("block"), py::arg("x"), py::arg("y"), "The 2x2 matrix M_{x,y}; x and y must have unit norm.");
  m.def("split_eigenvalues",
        [](const Eigen::Matrix2cd& mat, double alpha) {
          const auto s = qnr::split_by_alpha(qnr::eigen2x2(qnr::Reduced2x2::from_matrix(mat)), alpha);
          return std::make_pair(s.lambda_alpha, s.lambda_alpha_pi);
        },
        py::arg("m"), py::arg("alpha") = 0.0, "(lambda_alpha, lambda_alpha_pi) of a 2x2 matrix.");
  m.def("objective",
        [](const qnr::BlockMatrix& b, const qnr::ComplexVector& x, const qnr::ComplexVector& y, double alpha,
           qnr::Complex lambda0, double penalty) {
          return qnr::objective(b, qnr::UnitPair(x, y), qnr::ObjectiveParams::make(alpha, lambda0, penalty));
        },
        py::arg("block"), py::arg("x"), py::arg("y"), py::arg("alpha") = 0.0, py::arg("lambda0") = qnr::Complex(0.0),
        py::arg("penalty") = 0.0);
  m.def("seek_boundary",
        [](const qnr::BlockMatrix& b, const qnr::ComplexVector& x, const qnr::ComplexVector& y, double alpha,
           qnr::Complex lambda0, double penalty, std::size_t iterations) {
          qnr::SeekConfig cfg;
          cfg.max_iterations = iterations;
          std::vector<std::pair<qnr::ComplexVector, qnr::ComplexVector>> out;
          for (const auto& p :
               qnr::seek_boundary(b, qnr::UnitPair(x, y), qnr::ObjectiveParams::make(alpha, lambda0, penalty), cfg))
            out.emplace_back(p.x(), p.y());
          return out;
        },
        py::arg("block"), py::arg("x"), py::arg("y"), py::arg("alpha") = 0.0, py::arg("lambda0") = qnr::Complex(0.0),
        py::arg("penalty") = 0.0, py::arg("iterations") = 2, "Ascent iterates as a list of (x, y).");

  m.def("compute_qnr",
        [](const qnr::BlockMatrix& b, std::optional<double> time_budget, std::optional<std::size_t> iterations,
           double alpha, std::uint64_t seed) {
          qnr::DriverConfig cfg;
          cfg.alpha = alpha;
          cfg.seed = seed;
          cfg.time_budget = seconds(time_budget);
          cfg.max_outer_iterations = iterations;
          qnr::PointCloud cloud;
          {
            py::gil_scoped_release release;
            cloud = qnr::compute_qnr(b, cfg);
          }
          return cloud_arrays(cloud);
        },
        py::arg("block"), py::arg("time_budget") = py::none(), py::arg("iterations") = py::none(),
        py::arg("alpha") = 0.0, py::arg("seed") = 0, "Boundary-seeking point cloud as (W, W_tilde).");
  m.def("random_sampling",
        [](const qnr::BlockMatrix& b, std::optional<std::size_t> samples, std::optional<double> duration, double alpha,
           std::uint64_t seed) {
          qnr::PointCloud cloud;
          {
            py::gil_scoped_release release;
            cloud = qnr::random_sampling_baseline(b, {samples, seconds(duration)}, alpha, seed, false);
          }
          return cloud_arrays(cloud);
        },
        py::arg("block"), py::arg("samples") = py::none(), py::arg("duration") = py::none(), py::arg("alpha") = 0.0,
        py::arg("seed") = 0);

  m.def("operator_norm", [](const qnr::ComplexMatrix& mat) { return qnr::operator_norm(mat); });
  m.def("full_spectrum", &qnr::full_spectrum);
  m.def("hausdorff", [](const std::vector<qnr::Complex>& k, const std::vector<qnr::Complex>& l) {
    return qnr::hausdorff(k, l);
  });
  m.def("perturbation_bound", [](const Eigen::Matrix2cd& m1, const Eigen::Matrix2cd& m2) {
    const auto r = qnr::perturbation_bound(m1, m2);
    return std::make_pair(r.lhs, r.rhs);
  });
  m.def("concentration_experiment",
        [](const std::string& gen, std::vector<std::size_t> dims, std::vector<double> epsilons, std::size_t samples,
           std::uint64_t seed) {
          qnr::ConcentrationConfig cfg;
          cfg.dims = std::move(dims);
          cfg.epsilons = std::move(epsilons);
          cfg.samples_per_dim = samples;
          cfg.seed = seed;
          qnr::ConcentrationReport r;
          {
            py::gil_scoped_release release;
            r = qnr::concentration_experiment([&gen](std::size_t d) { return qnr::generate(gen, d); }, cfg);
          }
          py::dict out;
          out["dims"] = r.dims;
          out["n0"] = r.n0;
          out["operator_norms"] = r.operator_norms;
          out["epsilons"] = r.epsilons;
          out["exceedance"] = r.exceedance;
          out["samples_per_dim"] = r.samples_per_dim;
          out["fitted_decay"] = r.fitted_decay;
          return out;
        },
        py::arg("gen"), py::arg("dims"), py::arg("epsilons"), py::arg("samples") = 100000, py::arg("seed") = 0);
}
