#include "golden.hpp"
#include "helpers.hpp"

#include "superleib/catalog.hpp"
#include "superleib/checks.hpp"
#include "superleib/io.hpp"
#include "superleib/matrix_graded.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace superleib;
using namespace testing_support;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

cli::CommandResult run(std::vector<std::string> args) {
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(FIXTURES_DIR);
  args.push_back("--canonical");
  auto r = cli::run_command(args);
  std::filesystem::current_path(saved);
  return r;
}

}  // namespace

TEST_CASE("scalars and vectors", "[io]") {
  SuperSpace s("s", {Parity::even, Parity::odd}, {"x", "y"});
  SparseVector v = io::parse_vector(io::Json::parse(R"({"x": "-3/6", "y": 2})"), s);
  CHECK(v.at(0) == Scalar(-1, 2));
  CHECK(v.at(1) == 2);
  CHECK(io::vector_to_json(v, s).dump() == R"({"x":"-1/2","y":"2"})");
  for (const char* bad : {R"({"x": "1/0"})", R"({"x": "a"})", R"({"x": "3/-6"})", R"({"x": 1.5})"}) {
    INFO(bad);
    CHECK(error_kind([&] { io::parse_vector(io::Json::parse(bad), s); }) == "malformed_scalar");
  }
  CHECK(error_kind([&] { io::parse_vector(io::Json::parse(R"({"z": "1"})"), s); }) == "unknown_label");
}

TEST_CASE("algebra files", "[io]") {
  CHECK(error_kind([] { io::load_algebra(fixture("invalid/bad_scalar.alg")); }) == "malformed_scalar");
  CHECK(error_kind([] { io::load_algebra(fixture("invalid/duplicate_label.alg")); }) == "duplicate_label");
  CHECK(error_kind([] { io::load_algebra(fixture("invalid/unknown_label.alg")); }) == "unknown_label");
  CHECK(error_kind([] { io::load_algebra(fixture("missing.alg")); }) == "io_error");
  try {
    io::load_algebra(fixture("invalid/syntax.alg"));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == "parse_error");
    CHECK(std::string(e.what()).find("syntax.alg:5:12") != std::string::npos);
  }
  CHECK(error_kind([] { io::load_dialgebra(fixture("gl_1_1_K.alg")); }) == "wrong_kind");
  CHECK(error_kind([] { io::load_leibniz(fixture("K.alg")); }) == "wrong_kind");

  LeibnizSuperalgebra one = io::load_leibniz(fixture("one_dim.alg"));
  CHECK(one.dim() == 1);
  CHECK(check_leibniz(io::load_leibniz(fixture("gl_1_1_K.alg"))).passed);

  // write/read round trips
  for (const auto& d : {catalog::matrix_superalgebra(1, 1), catalog::unital_differential_exterior()}) {
    io::Algebra back = io::parse_algebra(io::to_json(d));
    const auto& e = std::get<SuperDialgebra>(back);
    CHECK(e.space.labels == d.space.labels);
    CHECK(e.space.parities == d.space.parities);
    CHECK(e.left == d.left);
    CHECK(e.right == d.right);
    CHECK(e.bar_unit == d.bar_unit);
  }
  LeibnizSuperalgebra gl = build_gl(2, 1, catalog::exterior(1)).algebra;
  auto back = std::get<LeibnizSuperalgebra>(io::parse_algebra(io::to_json(gl)));
  CHECK(back.bracket == gl.bracket);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"check", "leibniz", "gl_2_1_K.alg"}).exit_code == 0);
  CHECK(run({"check", "lie", "diff_UT2.alg"}).exit_code == 1);
  CHECK(run({"check", "leibniz", "invalid/syntax.alg"}).exit_code == 2);
  CHECK(run({"check", "leibniz", "nowhere.alg"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"check", "nonsense", "K.alg"}).exit_code == 2);
  CHECK(run({"build", "gl", "1", "0", "K.alg"}).exit_code == 2);

  auto r = run({"check", "lie", "diff_UT2.alg", "--format", "structured"});
  io::Json j = io::Json::parse(r.output);
  CHECK(j["command"] == "check lie");
  CHECK(j["status"] == "fail");
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(j["report"]["violation_count"].get<int>() > 0);

  auto limited = run({"check", "lie", "diff_UT2.alg", "--format", "structured", "--max-violations", "1"});
  CHECK(io::Json::parse(limited.output)["report"]["violations"].size() == 1);

  // build output loads back
  auto built = run({"build", "gl", "2", "1", "Lambda2.alg"});
  REQUIRE(built.exit_code == 0);
  auto l = std::get<LeibnizSuperalgebra>(io::parse_algebra(io::Json::parse(built.output)));
  CHECK(l.bracket == build_gl(2, 1, catalog::exterior(2)).algebra.bracket);
}

TEST_CASE("--out writes the payload", "[cli]") {
  auto path = std::filesystem::temp_directory_path() / "superleib_out_test.json";
  std::filesystem::remove(path);
  auto r = run({"build", "sl", "2", "1", "K.alg", "--out", path.string()});
  CHECK(r.exit_code == 0);
  CHECK(slurp(path) == r.output);
  std::filesystem::remove(path);
}

TEST_CASE("golden outputs are byte-identical across worker counts", "[cli]") {
  std::size_t ran = 0;
  for (const char* parallel : {"1", "8"}) {
    INFO("parallel " << parallel);
    auto bad = golden_mismatches(FIXTURES_DIR, parallel, &ran);
    CHECK(bad.empty());
    for (const auto& name : bad) UNSCOPED_INFO(name);
  }
  CHECK(ran >= 40);
}
