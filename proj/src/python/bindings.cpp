#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antisym/campaigns.hpp"
#include "antisym/eof.hpp"
#include "antisym/io.hpp"

namespace py = pybind11;
using namespace antisym;

namespace {

std::optional<int> tag_from_arg(const py::object& n) {
  if (n.is_none()) return std::nullopt;
  return n.cast<int>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "n-copy three-level antisymmetric bipartite states: spectra, "
            "entanglement bounds, and entanglement-of-formation optimization";

  m.def("levi_civita", &levi_civita, py::arg("i"), py::arg("j"), py::arg("k"));
  m.def("encode_multi_index",
        [](const std::vector<int>& digits) { return encode_multi_index(digits); },
        py::arg("digits"));
  m.def("decode_multi_index", &decode_multi_index, py::arg("flat"), py::arg("n"));

  py::class_<AmplitudeTensor>(m, "AmplitudeTensor")
      .def(py::init<int, Vector>(), py::arg("n"), py::arg("entries"))
      .def_static("basis", &AmplitudeTensor::basis, py::arg("n"), py::arg("flat"))
      .def_property_readonly("n", &AmplitudeTensor::copies)
      .def_property_readonly("entries", &AmplitudeTensor::entries);

  py::class_<CoefficientMatrix>(m, "CoefficientMatrix")
      .def(py::init<int, Matrix>(), py::arg("n"), py::arg("entries"))
      .def_property_readonly("n", &CoefficientMatrix::copies)
      .def_property_readonly("matrix", &CoefficientMatrix::matrix)
      .def("max_antisymmetry_violation", &CoefficientMatrix::max_antisymmetry_violation);

  m.def("coefficient_matrix", &coefficient_matrix, py::arg("a"));
  m.def("epsilon_contract", &epsilon_contract, py::arg("entries"), py::arg("n"));
  m.def("product_amplitude", &product_amplitude, py::arg("a"), py::arg("b"));
  m.def("random_amplitude_tensor", &random_amplitude_tensor, py::arg("n"), py::arg("seed"));
  m.def("state_vector", &state_vector, py::arg("a"));
  m.def("antisym_projector", &antisym_projector, py::arg("n"));
  m.def("antisym_support_residual", &antisym_support_residual, py::arg("rho"), py::arg("n"));

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<Matrix>(), py::arg("entries"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim);

  m.def("reduced_density", &reduced_density, py::arg("alpha"));
  m.def("eigenvalues", &eigenvalues, py::arg("rho"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("power_sum", &power_sum, py::arg("rho"), py::arg("k"));
  m.def("elementary_symmetric", &elementary_symmetric, py::arg("rho"), py::arg("k"));
  m.def("generalized_concurrence", &generalized_concurrence, py::arg("rho"));
  m.def("s2_minor_oracle", &s2_minor_oracle, py::arg("alpha"));
  m.def("entropy_of_entanglement", &entropy_of_entanglement, py::arg("a"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("bound_name", &BoundReport::bound_name)
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("slack", &BoundReport::slack)
      .def_readonly("tolerance", &BoundReport::tolerance)
      .def_readonly("satisfied", &BoundReport::satisfied)
      .def_readonly("input_digest", &BoundReport::input_digest)
      .def_readonly("details", &BoundReport::details);

  m.def("furuta_rhs", &furuta_rhs, py::arg("lam"), py::arg("x"));
  m.def("entropy_purity_bound", &entropy_purity_bound, py::arg("rho"));
  m.def("purity_bound_check", &purity_bound_check, py::arg("a"));
  m.def("i2_defect", &i2_defect, py::arg("a"));
  m.def("antisym_entropy_check", &antisym_entropy_check, py::arg("a"));
  m.def("shimono_lower_bound", &shimono_lower_bound, py::arg("d"));

  py::class_<MixedState>(m, "MixedState")
      .def_readonly("dim_a", &MixedState::dim_a)
      .def_readonly("dim_b", &MixedState::dim_b)
      .def_readonly("rho", &MixedState::rho)
      .def_readonly("antisym_copies", &MixedState::antisym_copies);

  m.def("make_mixed_state",
        [](int dim_a, int dim_b, const Matrix& rho, const py::object& tag) {
          return make_mixed_state(dim_a, dim_b, rho, tag_from_arg(tag));
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("rho"), py::arg("antisym_copies") = py::none());
  m.def("mixed_from_pure",
        [](const Vector& psi, int dim_a, int dim_b, const py::object& tag) {
          return mixed_from_pure(psi, dim_a, dim_b, tag_from_arg(tag));
        },
        py::arg("psi"), py::arg("dim_a"), py::arg("dim_b"), py::arg("antisym_copies") = py::none());
  m.def("mixed_from_ensemble",
        [](const std::vector<double>& w, const std::vector<Vector>& s, int dim_a, int dim_b,
           const py::object& tag) {
          return mixed_from_ensemble(w, s, dim_a, dim_b, tag_from_arg(tag));
        },
        py::arg("weights"), py::arg("states"), py::arg("dim_a"), py::arg("dim_b"),
        py::arg("antisym_copies") = py::none());
  m.def("tensor_product", &tensor_product, py::arg("x"), py::arg("y"));

  py::class_<DecompositionEnsemble>(m, "DecompositionEnsemble")
      .def(py::init<>())
      .def_readwrite("weights", &DecompositionEnsemble::weights)
      .def_readwrite("states", &DecompositionEnsemble::states)
      .def("__len__", &DecompositionEnsemble::size);

  m.def("reconstruction_residual", &reconstruction_residual, py::arg("ensemble"), py::arg("rho"));
  m.def("ensemble_average_entropy", &ensemble_average_entropy, py::arg("ensemble"),
        py::arg("dim_a"), py::arg("dim_b"));
  m.def("product_ensemble", &product_ensemble, py::arg("e1"), py::arg("a1"), py::arg("b1"),
        py::arg("e2"), py::arg("a2"), py::arg("b2"));

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init<>())
      .def_readwrite("ensemble_size", &OptimizerConfig::ensemble_size)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
      .def_readwrite("step_tolerance", &OptimizerConfig::step_tolerance)
      .def_readwrite("objective_tolerance", &OptimizerConfig::objective_tolerance)
      .def_readwrite("seed", &OptimizerConfig::seed);

  py::class_<TracePoint>(m, "TracePoint")
      .def_readonly("restart", &TracePoint::restart)
      .def_readonly("iteration", &TracePoint::iteration)
      .def_readonly("objective", &TracePoint::objective)
      .def_readonly("step_norm", &TracePoint::step_norm);

  py::class_<EofResult>(m, "EofResult")
      .def_readonly("value", &EofResult::value)
      .def_readonly("best", &EofResult::best)
      .def_readonly("converged", &EofResult::converged)
      .def_readonly("trace", &EofResult::trace)
      .def_readonly("input_digest", &EofResult::input_digest);

  m.def("eof_upper_bound",
        [](const MixedState& state, const OptimizerConfig& cfg, const py::object& warm) {
          if (warm.is_none()) return eof_upper_bound(state, cfg);
          auto ens = warm.cast<DecompositionEnsemble>();
          return eof_upper_bound(state, cfg, &ens);
        },
        py::arg("state"), py::arg("cfg") = OptimizerConfig{}, py::arg("warm_start") = py::none());

  py::class_<SandwichReport>(m, "SandwichReport")
      .def_readonly("lower", &SandwichReport::lower)
      .def_readonly("upper", &SandwichReport::upper)
      .def_readonly("gap", &SandwichReport::gap)
      .def_readonly("converged", &SandwichReport::converged)
      .def_readonly("input_digest", &SandwichReport::input_digest)
      .def_readonly("opt", &SandwichReport::opt);

  m.def("eof_sandwich",
        [](const MixedState& state, const OptimizerConfig& cfg, const py::object& warm) {
          if (warm.is_none()) return eof_sandwich(state, cfg);
          auto ens = warm.cast<DecompositionEnsemble>();
          return eof_sandwich(state, cfg, &ens);
        },
        py::arg("state"), py::arg("cfg") = OptimizerConfig{}, py::arg("warm_start") = py::none());

  py::class_<EcPoint>(m, "EcPoint")
      .def_readonly("n", &EcPoint::copies)
      .def_readonly("upper_ratio", &EcPoint::upper_ratio)
      .def_readonly("lower_ratio", &EcPoint::lower_ratio)
      .def_readonly("report", &EcPoint::report);

  m.def("ec_estimate", &ec_estimate, py::arg("rho"), py::arg("n_max"),
        py::arg("cfg") = OptimizerConfig{});

  py::class_<SampleRecord>(m, "SampleRecord")
      .def_readonly("index", &SampleRecord::index)
      .def_readonly("seed", &SampleRecord::seed)
      .def_readonly("report", &SampleRecord::report);

  py::class_<CampaignSummary>(m, "CampaignSummary")
      .def_readonly("bound", &CampaignSummary::bound)
      .def_readonly("samples", &CampaignSummary::samples)
      .def_readonly("violations", &CampaignSummary::violations)
      .def_readonly("min_slack", &CampaignSummary::min_slack)
      .def_readonly("argmin_seed", &CampaignSummary::argmin_seed);

  py::class_<CampaignResult>(m, "CampaignResult")
      .def_readonly("records", &CampaignResult::records)
      .def_readonly("summary", &CampaignResult::summary);

  m.def("purity_campaign", &purity_campaign, py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("tol") = 1e-10);
  m.def("entropy_campaign", &entropy_campaign, py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("tol") = 1e-9);
  m.def("oracle_campaign", &oracle_campaign, py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("tol") = 1e-9);
  m.def("defect_campaign", &defect_campaign, py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("tol") = 1e-9);
}
