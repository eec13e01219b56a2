#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "midrange/io.hpp"
#include "support.hpp"

using namespace midrange;
using Catch::Approx;

TEST_CASE("12-significant-digit quantization is a fixed point") {
  REQUIRE(format_real(std::log(4.0)) == "1.38629436112");
  REQUIRE(format_real(2.0) == "2");

  Rng rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = rng.normal() * std::exp(rng.uniform(-12.0, 12.0));
    const double q = quantize12(x);
    REQUIRE(quantize12(q) == q);  // bitwise idempotent
    REQUIRE(std::strtod(format_real(q).c_str(), nullptr) == q);
    REQUIRE(std::abs(q - x) <= 1e-11 * std::abs(x));
  }
}

TEST_CASE("matrix file loading") {
  std::istringstream in(R"({
    "n": 2,
    "matrices": [
      {"name": "A", "data": [[1.0, 0.0], [0.0, 1.0]]},
      {"name": "B", "data": [[1.0, 0.5], [0.5, 4.0]]}
    ]
  })");
  const MatrixFile file = load_matrix_file(in);
  REQUIRE(file.n == 2);
  REQUIRE(file.matrices.size() == 2);
  REQUIRE(file.find("B")(0, 1) == 0.5);
  REQUIRE_THROWS_AS(file.find("C"), ValidationError);
}

TEST_CASE("matrix file validation failures") {
  SECTION("broken JSON") {
    std::istringstream in("{nope");
    REQUIRE_THROWS_AS(load_matrix_file(in), ValidationError);
  }
  SECTION("missing keys") {
    std::istringstream in(R"({"matrices": []})");
    REQUIRE_THROWS_AS(load_matrix_file(in), ValidationError);
  }
  SECTION("ragged rows") {
    std::istringstream in(R"({"n": 2, "matrices": [{"name": "A", "data": [[1, 0], [0]]}]})");
    REQUIRE_THROWS_AS(load_matrix_file(in), ValidationError);
  }
  SECTION("asymmetry beyond the 1e-12 gate") {
    std::istringstream in(
        R"({"n": 2, "matrices": [{"name": "A", "data": [[1, 0.1], [0.2, 1]]}]})");
    REQUIRE_THROWS_AS(load_matrix_file(in), ValidationError);
  }
  SECTION("tiny asymmetry is symmetrized away") {
    std::istringstream in(
        R"({"n": 2, "matrices": [{"name": "A", "data": [[1, 0.5], [0.5000000000001, 1]]}]})");
    const MatrixFile file = load_matrix_file(in);
    REQUIRE(file.find("A")(0, 1) == file.find("A")(1, 0));
  }
  SECTION("non-numeric entry") {
    std::istringstream in(R"({"n": 1, "matrices": [{"name": "A", "data": [["x"]]}]})");
    REQUIRE_THROWS_AS(load_matrix_file(in), ValidationError);
  }
}

TEST_CASE("vector file loading") {
  std::istringstream in(R"({
    "n": 2,
    "vectors": [
      {"name": "y1", "data": [1.0, 8.0]},
      {"name": "y2", "data": [4.0, 2.0]}
    ]
  })");
  const VectorFile file = load_vector_file(in);
  REQUIRE(file.n == 2);
  REQUIRE(file.vectors.size() == 2);
  REQUIRE(file.vectors[1].data[0] == 4.0);

  std::istringstream bad(R"({"n": 3, "vectors": [{"name": "y", "data": [1.0]}]})");
  REQUIRE_THROWS_AS(load_vector_file(bad), ValidationError);
}

TEST_CASE("matrix files round-trip byte-identically") {
  Rng rng(82);
  MatrixFile file;
  file.n = 3;
  for (int k = 0; k < 3; ++k) {
    file.matrices.push_back({"m" + std::to_string(k), random_spd(rng, 3).sym()});
  }

  std::ostringstream first;
  write_matrix_file(first, file);

  std::istringstream back(first.str());
  const MatrixFile reloaded = load_matrix_file(back);
  std::ostringstream second;
  write_matrix_file(second, reloaded);

  REQUIRE(first.str() == second.str());
}
