#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "depthlab/serialize.hpp"
#include "support.hpp"

using namespace depthlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_sample(const std::string& name, const DataMatrix& m) {
  const auto path = fs::temp_directory_path() / ("depthlab_cli_" + name + ".csv");
  std::ofstream f(path);
  save_matrix(f, m);
  return path.string();
}

const std::string kStars = std::string(DEPTHLAB_DATA_DIR) + "/starsCYG.csv";

}  // namespace

TEST_CASE("deepreg on the bundled data") {
  const auto r = run({"deepreg", "--in", kStars});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["intercept"].get<double>() == doctest::Approx(-7.903043).epsilon(1e-6));
  CHECK(j["slope"].get<double>() == doctest::Approx(2.913043).epsilon(1e-6));
}

TEST_CASE("depth output is deterministic across runs and thread counts") {
  const auto data = write_sample("data", testing_support::gaussian_sample(60, 2, 1));
  const auto pts = write_sample("pts", testing_support::gaussian_sample(10, 2, 2));
  const auto a = run({"depth", "--method", "tukey", "--in", pts, "--ref", data, "--seed", "1", "--threads", "1"});
  const auto b = run({"depth", "--method", "tukey", "--in", pts, "--ref", data, "--seed", "1", "--threads", "-10"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = Json::parse(a.out);
  CHECK(j["values"].size() == 10);
  CHECK(j["method"]["seed"].get<std::uint64_t>() == 1);
}

TEST_CASE("wilcoxon reports S and p") {
  const auto x = write_sample("x", testing_support::gaussian_sample(20, 2, 3));
  const auto y = write_sample("y", testing_support::gaussian_sample(25, 2, 4));
  const auto r = run({"wilcoxon", "--x", x, "--y", y, "--alternative", "greater"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["p"].get<double>() >= 0.0);
  CHECK(j["p"].get<double>() <= 1.0);
  CHECK(j.contains("S"));
}

TEST_CASE("formats and output files") {
  const auto data = write_sample("fmt", testing_support::gaussian_sample(30, 2, 5));
  const auto csv = run({"scalecurve", "--in", data, "--format", "csv", "--projections", "50"});
  CHECK(csv.out.rfind("alpha,value\n", 0) == 0);
  const auto svg = run({"contour", "--in", data, "--grid", "6", "--format", "svg", "--method", "euclidean"});
  CHECK(svg.out.rfind("<svg", 0) == 0);
  const auto target = (fs::temp_directory_path() / "depthlab_cli_out.json").string();
  CHECK(run({"median", "--in", data, "--out", target}).code == 0);
  std::ifstream f(target);
  CHECK(Json::parse(f)["median"].size() == 2);
}

TEST_CASE("usage and data errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"depth", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"depth", "--in", kStars, "--method", "oja"}).code == cli::kExitUsage);
  CHECK(run({"median", "--in", kStars, "--format", "svg"}).code == cli::kExitUsage);
  CHECK(run({"depth"}).code == cli::kExitUsage);
  const auto missing = run({"depth", "--in", "/nonexistent/file.csv"});
  CHECK(missing.code == cli::kExitData);
  CHECK(missing.err.find("/nonexistent/file.csv") != std::string::npos);

  const auto three = write_sample("three", testing_support::gaussian_sample(10, 3, 1));
  CHECK(run({"depth", "--in", three, "--ref", kStars}).code == cli::kExitData);
  CHECK(run({"deepreg", "--in", three}).code == cli::kExitData);
  const auto bad = fs::temp_directory_path() / "depthlab_cli_bad.csv";
  std::ofstream(bad) << "1,2\n3\n";
  const auto ragged = run({"median", "--in", bad.string()});
  CHECK(ragged.code == cli::kExitData);
  CHECK(ragged.err.find("row 2") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
