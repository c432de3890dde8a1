#include "sparsectl/design.hpp"

#include "sparsectl/criteria.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <random>

using namespace sparsectl;
using testsupport::load_fixture;
using testsupport::random_integer_system;
using testsupport::random_vector;

TEST_CASE("stacked_design_matrix") {
  SUBCASE("horizon one is just C B") {
    LinearSystem sys;
    sys.A = Matrix::Identity(2, 2);
    sys.B = Matrix::Identity(2, 2);
    sys.C = Matrix(1, 2);
    sys.C << 1, -1;
    const Matrix phi = stacked_design_matrix(sys);  // n = 1
    CHECK((phi - sys.C * sys.B).norm() == 0.0);
  }
  SUBCASE("A = 0 zeroes everything but the last block") {
    LinearSystem sys;
    sys.A = Matrix::Zero(3, 3);
    sys.B = Matrix::Identity(3, 3);
    sys.C = Matrix::Identity(3, 3).topRows(2);
    const Matrix phi = stacked_design_matrix(sys);  // n = 2 blocks
    CHECK(phi.leftCols(3).norm() == 0.0);
    CHECK((phi.rightCols(3) - sys.C * sys.B).norm() == 0.0);
  }
  SUBCASE("second fixture by direct multiplication") {
    const Matrix phi = stacked_design_matrix(load_fixture("example2.json"));
    Matrix expected(2, 4);
    expected << 1, 0, 1, 1,
                0, 1, 0, 0;
    CHECK((phi - expected).norm() == 0.0);
  }
}

TEST_CASE("already-attained target needs no input") {
  std::mt19937 rng(61);
  const LinearSystem sys = load_fixture("example1.json");
  const Vector x0 = random_vector(rng, 5);
  Matrix power = Matrix::Identity(5, 5);
  for (int i = 0; i < 3; ++i) power = sys.A * power;  // horizon n = 3

  DesignProblem p{sys, x0, sys.C * power * x0, 1, 1e-8};
  const DesignSolution sol = design_sparse_inputs(p);
  CHECK(sol.target_reached);
  CHECK(sol.residual == 0.0);
  for (const auto& u : sol.inputs.inputs) CHECK(u.norm() == 0.0);
}

TEST_CASE("single-input restriction reduces to plain least squares") {
  std::mt19937 rng(62);
  const LinearSystem sys = load_fixture("example2_b2.json");
  for (int trial = 0; trial < 20; ++trial) {
    DesignProblem p{sys, Vector::Zero(4), random_vector(rng, 2), 1, 1e-8};
    const DesignSolution sol = design_sparse_inputs(p);
    CHECK(sol.target_reached);
    CHECK(sol.residual <= 1e-8);
    CHECK(sparsity_of(sol.inputs) <= 1);
    CHECK(verify_design(sys, p.x0, sol, p.yf) <= 1e-8);
  }
}

TEST_CASE("unreachable target is reported, not masked") {
  const LinearSystem sys = load_fixture("zero_output.json");
  Vector yf(1);
  yf << 1.0;
  DesignProblem p{sys, Vector::Zero(2), yf, 1, 1e-8};
  const DesignSolution sol = design_sparse_inputs(p);
  CHECK_FALSE(sol.target_reached);
  CHECK(sol.residual == doctest::Approx(1.0));
  CHECK(sol.warning.has_value());
}

TEST_CASE("solutions respect the sparsity budget") {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearSystem sys = random_integer_system(rng, {4, 3, 2, -2, 2});
    const int m = static_cast<int>(sys.input_dim());
    const int s = 1 + static_cast<int>(rng() % m);
    DesignProblem p{sys, random_vector(rng, static_cast<int>(sys.state_dim())),
                    random_vector(rng, static_cast<int>(sys.output_dim())), s, 1e-8};
    const DesignSolution sol = design_sparse_inputs(p);
    CHECK(sparsity_of(sol.inputs) <= s);
    for (const auto& step : sol.supports) CHECK(static_cast<int>(step.size()) <= s);
  }
}

TEST_CASE("greedy residuals never increase") {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearSystem sys = random_integer_system(rng, {4, 3, 2, -2, 2});
    DesignProblem p{sys, random_vector(rng, static_cast<int>(sys.state_dim())),
                    random_vector(rng, static_cast<int>(sys.output_dim())),
                    static_cast<int>(sys.input_dim()), 0.0};
    const DesignSolution sol = design_sparse_inputs(p);
    for (size_t i = 1; i < sol.residual_history.size(); ++i) {
      CHECK(sol.residual_history[i] <= sol.residual_history[i - 1] + 1e-12);
    }
  }
}

TEST_CASE("full budget solves every output-controllable fixture exactly") {
  std::mt19937 rng(65);
  const TolerancePolicy pol;
  for (const char* name : {"example1.json", "example2.json", "example2_b2.json",
                           "identity2.json", "identity3.json", "chain.json",
                           "symmetric.json", "invertible.json"}) {
    CAPTURE(name);
    const LinearSystem sys = load_fixture(name);
    REQUIRE(check_output_controllable(sys));
    for (int trial = 0; trial < 5; ++trial) {
      DesignProblem p{sys, random_vector(rng, static_cast<int>(sys.state_dim())),
                      random_vector(rng, static_cast<int>(sys.output_dim())),
                      static_cast<int>(sys.input_dim()), 1e-8};
      const DesignSolution sol = design_sparse_inputs(p);
      CHECK(sol.target_reached);
      CHECK(sol.residual <= pol.residual_tol);
      CHECK(verify_design(sys, p.x0, sol, p.yf) <= 1e-8);
    }
  }
}

TEST_CASE("algebraic and simulated residuals agree") {
  std::mt19937 rng(66);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearSystem sys = random_integer_system(rng, {4, 3, 2, -2, 2});
    const int m = static_cast<int>(sys.input_dim());
    DesignProblem p{sys, random_vector(rng, static_cast<int>(sys.state_dim())),
                    random_vector(rng, static_cast<int>(sys.output_dim())),
                    1 + static_cast<int>(rng() % m), 1e-8};
    const DesignSolution sol = design_sparse_inputs(p);
    const double simulated = verify_design(sys, p.x0, sol, p.yf);
    CHECK(std::abs(simulated - sol.residual) <= 1e-10 * (1.0 + sol.residual));
  }
}

TEST_CASE("perturbing a solution moves the simulated output") {
  std::mt19937 rng(67);
  const LinearSystem sys = load_fixture("identity2.json");
  DesignProblem p{sys, Vector::Zero(2), random_vector(rng, 2), 2, 1e-8};
  DesignSolution sol = design_sparse_inputs(p);
  REQUIRE(sol.target_reached);
  sol.inputs.inputs.back()(0) += 1.0;
  // The last input feeds through C B = I, so the residual grows by one.
  CHECK(verify_design(sys, p.x0, sol, p.yf) == doctest::Approx(1.0));
}

TEST_CASE("horizon override extends the stacked matrix") {
  const LinearSystem sys = load_fixture("example2.json");
  const Matrix phi2 = stacked_design_matrix(sys, 2);
  const Matrix phi3 = stacked_design_matrix(sys, 3);
  CHECK(phi3.cols() == 6);
  CHECK((phi3.rightCols(4) - phi2).norm() == 0.0);

  DesignProblem p{sys, Vector::Zero(4), Vector::Zero(2), 1, 1e-8};
  const DesignSolution sol = design_sparse_inputs(p, 5);
  CHECK(sol.inputs.horizon() == 5);
}

TEST_CASE("design rejects inconsistent problems") {
  const LinearSystem sys = load_fixture("example2.json");
  DesignProblem bad_x0{sys, Vector::Zero(3), Vector::Zero(2), 1, 1e-8};
  CHECK_THROWS_AS(design_sparse_inputs(bad_x0), std::invalid_argument);
  DesignProblem bad_yf{sys, Vector::Zero(4), Vector::Zero(3), 1, 1e-8};
  CHECK_THROWS_AS(design_sparse_inputs(bad_yf), std::invalid_argument);
  DesignProblem bad_s{sys, Vector::Zero(4), Vector::Zero(2), 5, 1e-8};
  CHECK_THROWS_AS(design_sparse_inputs(bad_s), std::invalid_argument);
}
