#include "sparsectl/io.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace sparsectl;

namespace {

std::string repr_system(const LinearSystem& sys) {
  std::ostringstream os;
  os << "LinearSystem(";
  if (!sys.name.empty()) os << "'" << sys.name << "', ";
  os << "N=" << sys.state_dim() << ", m=" << sys.input_dim() << ", n=" << sys.output_dim()
     << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Output controllability of discrete-time LTI systems under per-step sparse inputs";

  py::register_exception<NumericalInconsistencyError>(m, "NumericalInconsistencyError",
                                                      PyExc_RuntimeError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);

  py::class_<TolerancePolicy>(m, "TolerancePolicy")
      .def(py::init<>())
      .def(py::init([](double rank_tol, double residual_tol) {
             return TolerancePolicy{rank_tol, residual_tol};
           }),
           py::arg("relative_rank_tol"), py::arg("residual_tol"))
      .def_readwrite("relative_rank_tol", &TolerancePolicy::relative_rank_tol)
      .def_readwrite("residual_tol", &TolerancePolicy::residual_tol);

  py::class_<LinearSystem>(m, "LinearSystem")
      .def(py::init([](Matrix a, Matrix b, Matrix c, std::string name) {
             LinearSystem sys{std::move(a), std::move(b), std::move(c), std::move(name)};
             require_valid(sys);
             return sys;
           }),
           py::arg("A"), py::arg("B"), py::arg("C"), py::arg("name") = "")
      .def_readwrite("A", &LinearSystem::A)
      .def_readwrite("B", &LinearSystem::B)
      .def_readwrite("C", &LinearSystem::C)
      .def_readwrite("name", &LinearSystem::name)
      .def_property_readonly("N", &LinearSystem::state_dim)
      .def_property_readonly("m", &LinearSystem::input_dim)
      .def_property_readonly("n", &LinearSystem::output_dim)
      .def("__repr__", &repr_system);

  py::class_<SparseInputSequence>(m, "SparseInputSequence")
      .def(py::init([](std::vector<Vector> inputs, int sparsity) {
             return SparseInputSequence{std::move(inputs), sparsity};
           }),
           py::arg("inputs"), py::arg("sparsity"))
      .def_readwrite("inputs", &SparseInputSequence::inputs)
      .def_readwrite("sparsity", &SparseInputSequence::sparsity)
      .def_property_readonly("horizon", &SparseInputSequence::horizon);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("states", &Trajectory::states)
      .def_readonly("outputs", &Trajectory::outputs);

  py::class_<KalmanForm>(m, "KalmanForm")
      .def_readonly("basis", &KalmanForm::basis)
      .def_readonly("A_reduced", &KalmanForm::A_reduced)
      .def_readonly("B_reduced", &KalmanForm::B_reduced)
      .def_readonly("C_reduced", &KalmanForm::C_reduced)
      .def_readonly("rank", &KalmanForm::rank);

  py::class_<RankProfile>(m, "RankProfile")
      .def_readonly("ranks", &RankProfile::ranks)
      .def_readonly("metric", &RankProfile::metric);

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("value", &Rational::value)
      .def("__float__", &Rational::value)
      .def("__repr__", [](const Rational& r) {
        return std::to_string(r.num) + "/" + std::to_string(r.den);
      });

  py::class_<NecessaryCheck>(m, "NecessaryCheck")
      .def_readonly("holds", &NecessaryCheck::holds)
      .def_readonly("rank_ok", &NecessaryCheck::rank_ok)
      .def_readonly("rank_CW", &NecessaryCheck::rank_CW)
      .def_readonly("bound", &NecessaryCheck::bound)
      .def_readonly("bound_index", &NecessaryCheck::bound_index)
      .def_readonly("sparsity", &NecessaryCheck::sparsity);

  py::class_<SufficientCheck>(m, "SufficientCheck")
      .def_readonly("holds", &SufficientCheck::holds)
      .def_readonly("rank_ok", &SufficientCheck::rank_ok)
      .def_readonly("rank_CW", &SufficientCheck::rank_CW)
      .def_readonly("bound", &SufficientCheck::bound)
      .def_readonly("max_metric", &SufficientCheck::max_metric)
      .def_readonly("sparsity", &SufficientCheck::sparsity);

  py::class_<SparsityInterval>(m, "SparsityInterval")
      .def_readonly("lo", &SparsityInterval::lo)
      .def_readonly("hi", &SparsityInterval::hi)
      .def("__repr__", [](const SparsityInterval& si) {
        return "[" + std::to_string(si.lo) + ", " + std::to_string(si.hi) + "]";
      });

  py::class_<Corollary1Check>(m, "Corollary1Check")
      .def_readonly("applies", &Corollary1Check::applies)
      .def_readonly("rank_ok", &Corollary1Check::rank_ok)
      .def_readonly("reduced_bound", &Corollary1Check::reduced_bound)
      .def("reduced_condition", &Corollary1Check::reduced_condition, py::arg("s"));

  py::class_<Corollary2Check>(m, "Corollary2Check")
      .def_readonly("holds", &Corollary2Check::holds)
      .def_readonly("bound", &Corollary2Check::bound)
      .def_readonly("strict_bound", &Corollary2Check::strict_bound)
      .def_readonly("holds_strict", &Corollary2Check::holds_strict);

  py::class_<PbhCheck>(m, "PbhCheck")
      .def_readonly("holds", &PbhCheck::holds)
      .def_readonly("eig_rank_ok", &PbhCheck::eig_rank_ok)
      .def_readonly("rank_A", &PbhCheck::rank_A)
      .def_readonly("nullity_bound", &PbhCheck::nullity_bound);

  py::class_<TheoremCCheck>(m, "TheoremCCheck")
      .def_readonly("holds", &TheoremCCheck::holds)
      .def_readonly("rank_C_ok", &TheoremCCheck::rank_C_ok)
      .def_readonly("eig_rank_ok", &TheoremCCheck::eig_rank_ok)
      .def_readonly("rank_CA", &TheoremCCheck::rank_CA);

  py::class_<ControllabilityReport>(m, "ControllabilityReport")
      .def_readonly("name", &ControllabilityReport::name)
      .def_readonly("N", &ControllabilityReport::N)
      .def_readonly("m", &ControllabilityReport::m)
      .def_readonly("n", &ControllabilityReport::n)
      .def_readonly("rank_CW", &ControllabilityReport::rank_CW)
      .def_readonly("output_controllable", &ControllabilityReport::output_controllable)
      .def_readonly("profile", &ControllabilityReport::profile)
      .def_readonly("necessary_bound", &ControllabilityReport::necessary_bound)
      .def_readonly("sufficient_bound", &ControllabilityReport::sufficient_bound)
      .def_readonly("max_metric", &ControllabilityReport::max_metric)
      .def_readonly("s_list", &ControllabilityReport::s_list)
      .def_readonly("necessary_holds", &ControllabilityReport::necessary_holds)
      .def_readonly("sufficient_holds", &ControllabilityReport::sufficient_holds)
      .def_readonly("corollary2_holds", &ControllabilityReport::corollary2_holds)
      .def_readonly("pbh_state_sparse", &ControllabilityReport::pbh_state_sparse)
      .def_readonly("theoremC_necessary", &ControllabilityReport::theoremC_necessary)
      .def_readonly("min_sparsity", &ControllabilityReport::min_sparsity)
      .def_readonly("corollary1_applies", &ControllabilityReport::corollary1_applies)
      .def_readonly("corollary1_reduced_bound",
                    &ControllabilityReport::corollary1_reduced_bound)
      .def_readonly("corollary2_bound", &ControllabilityReport::corollary2_bound)
      .def_readonly("corollary2_strict_bound",
                    &ControllabilityReport::corollary2_strict_bound)
      .def_readonly("notes", &ControllabilityReport::notes)
      .def("to_json", [](const ControllabilityReport& r) { return report_to_json(r).dump(); })
      .def("to_text", [](const ControllabilityReport& r) { return report_to_text(r); });

  py::enum_<OracleStatus>(m, "OracleStatus")
      .value("Controllable", OracleStatus::Controllable)
      .value("NotWithinHorizon", OracleStatus::NotWithinHorizon);

  py::class_<OracleVerdict>(m, "OracleVerdict")
      .def_readonly("status", &OracleVerdict::status)
      .def_readonly("horizon_found", &OracleVerdict::horizon_found)
      .def_readonly("witness_supports", &OracleVerdict::witness_supports)
      .def_readonly("explored_horizon", &OracleVerdict::explored_horizon)
      .def_readonly("states_explored", &OracleVerdict::states_explored)
      .def_property_readonly("controllable", [](const OracleVerdict& v) {
        return v.status == OracleStatus::Controllable;
      });

  py::class_<DesignProblem>(m, "DesignProblem")
      .def(py::init([](LinearSystem sys, Vector x0, Vector yf, int sparsity, double tol) {
             return DesignProblem{std::move(sys), std::move(x0), std::move(yf), sparsity, tol};
           }),
           py::arg("sys"), py::arg("x0"), py::arg("yf"), py::arg("sparsity"),
           py::arg("tol") = 1e-8);

  py::class_<DesignSolution>(m, "DesignSolution")
      .def_readonly("inputs", &DesignSolution::inputs)
      .def_readonly("supports", &DesignSolution::supports)
      .def_readonly("residual", &DesignSolution::residual)
      .def_readonly("target_reached", &DesignSolution::target_reached)
      .def_readonly("residual_history", &DesignSolution::residual_history)
      .def_readonly("warning", &DesignSolution::warning)
      .def("to_json", [](const DesignSolution& s) { return solution_to_json(s).dump(); });

  // matops surface
  m.def("numerical_rank",
        [](const Matrix& mat, const TolerancePolicy& pol) { return numerical_rank(mat, pol); },
        py::arg("matrix"), py::arg("pol") = TolerancePolicy{});
  m.def("orthonormal_range_basis",
        [](const Matrix& mat, const TolerancePolicy& pol) {
          const RangeBasis rb = orthonormal_range_basis(mat, pol);
          return py::make_tuple(rb.basis, rb.rank);
        },
        py::arg("matrix"), py::arg("pol") = TolerancePolicy{});
  m.def("orthonormal_complement", &orthonormal_complement, py::arg("basis"),
        py::arg("pol") = TolerancePolicy{});
  m.def("pseudo_inverse", &pseudo_inverse, py::arg("matrix"), py::arg("pol") = TolerancePolicy{});
  m.def("least_squares_solve", &least_squares_solve, py::arg("matrix"), py::arg("rhs"),
        py::arg("pol") = TolerancePolicy{});

  // system surface
  m.def("validate", &validate, py::arg("sys"));
  m.def("simulate", &simulate, py::arg("sys"), py::arg("x0"), py::arg("inputs"));
  m.def("sparsity_of", &sparsity_of, py::arg("inputs"));
  m.def("load_system", &load_system, py::arg("path"));
  m.def("system_to_json", [](const LinearSystem& sys) { return system_to_json(sys).dump(); });

  // controllability surface
  m.def("controllability_matrix", &controllability_matrix, py::arg("sys"));
  m.def("kalman_decompose", &kalman_decompose, py::arg("sys"),
        py::arg("pol") = TolerancePolicy{});
  m.def("rank_profile", &rank_profile, py::arg("sys"), py::arg("pol") = TolerancePolicy{});

  // criteria surface
  m.def("check_output_controllable", &check_output_controllable, py::arg("sys"),
        py::arg("pol") = TolerancePolicy{});
  m.def("necessary_conditions", &necessary_conditions, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{});
  m.def("sufficient_conditions", &sufficient_conditions, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{});
  m.def("minimum_sparsity_interval", &minimum_sparsity_interval, py::arg("sys"),
        py::arg("pol") = TolerancePolicy{});
  m.def("corollary1_check", &corollary1_check, py::arg("sys"), py::arg("pol") = TolerancePolicy{});
  m.def("corollary2_check", &corollary2_check, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{});
  m.def("pbh_state_sparse", &pbh_state_sparse, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{});
  m.def("theoremC_necessary", &theoremC_necessary, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{});
  m.def("full_report", &full_report, py::arg("sys"), py::arg("s_list") = std::vector<int>{},
        py::arg("pol") = TolerancePolicy{});

  // oracle surface
  m.def("default_horizon", &default_horizon, py::arg("sys"), py::arg("s"),
        py::arg("pol") = TolerancePolicy{}, py::arg("cap") = 10000);
  m.def("brute_force_check", &brute_force_check, py::arg("sys"), py::arg("s"),
        py::arg("k_max"), py::arg("pol") = TolerancePolicy{},
        py::arg("budget_cap") = 10'000'000LL);

  // design surface
  m.def("stacked_design_matrix", &stacked_design_matrix, py::arg("sys"), py::arg("horizon") = 0);
  m.def("design_sparse_inputs", &design_sparse_inputs, py::arg("problem"),
        py::arg("horizon") = 0, py::arg("pol") = TolerancePolicy{});
  m.def("verify_design", &verify_design, py::arg("sys"), py::arg("x0"), py::arg("solution"),
        py::arg("yf"));

  m.attr("__version__") = "0.1.0";
}
