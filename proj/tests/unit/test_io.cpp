#include "sparsectl/io.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace sparsectl;
using nlohmann::json;
using testsupport::load_fixture;

TEST_CASE("load_system on the bundled fixtures") {
  const LinearSystem sys = load_fixture("example1.json");
  CHECK(sys.name == "example1");
  CHECK(sys.state_dim() == 5);
  CHECK(sys.input_dim() == 2);
  CHECK(sys.output_dim() == 3);

  CHECK_THROWS_WITH_AS(load_system("/nonexistent/system.json"),
                       doctest::Contains("cannot read"), std::invalid_argument);
}

TEST_CASE("system_from_json rejects malformed documents") {
  json good = {{"A", {{1.0, 0.0}, {0.0, 1.0}}},
               {"B", {{1.0}, {0.0}}},
               {"C", {{1.0, 0.0}}}};
  CHECK_NOTHROW(system_from_json(good));

  SUBCASE("missing field") {
    json j = good;
    j.erase("B");
    CHECK_THROWS_WITH_AS(system_from_json(j), doctest::Contains("\"B\""),
                         std::invalid_argument);
  }
  SUBCASE("ragged rows") {
    json j = good;
    j["A"] = {{1.0, 0.0}, {0.0}};
    CHECK_THROWS_WITH_AS(system_from_json(j), doctest::Contains("A"), std::invalid_argument);
  }
  SUBCASE("non-numeric entry") {
    json j = good;
    j["C"] = {{1.0, "x"}};
    CHECK_THROWS_AS(system_from_json(j), std::invalid_argument);
  }
  SUBCASE("dimension mismatch between blocks") {
    json j = good;
    j["B"] = {{1.0}, {0.0}, {0.0}};
    CHECK_THROWS_WITH_AS(system_from_json(j), doctest::Contains("B"), std::invalid_argument);
  }
  SUBCASE("non-finite entries (json null) are rejected") {
    json j = good;
    j["A"][0][0] = nullptr;
    CHECK_THROWS_AS(system_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("system round-trips through json") {
  const LinearSystem sys = load_fixture("example2.json");
  const LinearSystem back = system_from_json(system_to_json(sys));
  CHECK(back.name == sys.name);
  CHECK((back.A - sys.A).norm() == 0.0);
  CHECK((back.B - sys.B).norm() == 0.0);
  CHECK((back.C - sys.C).norm() == 0.0);
}

TEST_CASE("report serialization round-trips exactly") {
  for (const char* name : {"example1.json", "example2.json", "zero_output.json",
                           "identity3.json", "chain.json"}) {
    CAPTURE(name);
    const ControllabilityReport report = full_report(load_fixture(name));
    const json j = report_to_json(report);
    const json again = report_to_json(report_from_json(j));
    CHECK(j == again);
  }
}

TEST_CASE("report text rendering carries the headline verdicts") {
  const std::string text = report_to_text(full_report(load_fixture("example1.json")));
  CHECK(text.find("output controllable: yes") != std::string::npos);
  CHECK(text.find("[1, 2]") != std::string::npos);  // minimum sparsity interval
  CHECK(text.find("rank tol") != std::string::npos);
}

TEST_CASE("verdict and solution serialization") {
  const LinearSystem sys = load_fixture("example2.json");
  const OracleVerdict v = brute_force_check(sys, 1, 4);
  const json vj = verdict_to_json(v);
  CHECK(vj.at("status") == "controllable");
  CHECK(vj.at("horizon_found") == 2);
  CHECK(vj.at("witness_supports") == json::parse("[[2],[1]]"));

  DesignProblem p{sys, Vector::Zero(4), Vector::Zero(2), 1, 1e-8};
  const DesignSolution sol = design_sparse_inputs(p);
  const json sj = solution_to_json(sol);
  REQUIRE(sj.contains("inputs"));
  REQUIRE(sj.contains("supports"));
  REQUIRE(sj.contains("residual"));
  CHECK(sj.at("inputs").size() == 2);

  // A design solution document feeds straight back into the simulator.
  const SparseInputSequence seq = inputs_from_json(sj);
  CHECK(seq.horizon() == 2);
}

TEST_CASE("vector parsing accepts literals and files") {
  const Vector v = parse_vector_arg("[1, 2.5, -3]");
  REQUIRE(v.size() == 3);
  CHECK(v(1) == 2.5);

  const std::string path =
      (std::filesystem::temp_directory_path() / "sparsectl_vector_test.json").string();
  {
    std::ofstream out(path);
    out << "[4, 5]";
  }
  const Vector from_file = parse_vector_arg(path);
  REQUIRE(from_file.size() == 2);
  CHECK(from_file(0) == 4.0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_vector_arg("/nonexistent/vec.json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_arg("[1, \"a\"]"), std::invalid_argument);
}
