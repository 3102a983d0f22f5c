#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fbg/cli.hpp"
#include "fbg/io.hpp"
#include "fbg/multigraph.hpp"
#include "fixtures.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fbg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

std::string triangle_file() {
  return write_temp("fbg_cli_triangle.fbg",
                    fbg::serialize_instance(
                        {fbgtest::triangle(), fbgtest::ones(3)}));
}

}  // namespace

TEST_CASE("cli help and usage errors") {
  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
  CHECK(run({"solve", "--help"}).code == 0);

  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"solve", "--bogus-flag"}).code == 3);
  CHECK(run({"solve", "--format", "yaml"}).code == 3);
  CHECK(run({"solve", "--n", "not-a-number"}).code == 3);
}

TEST_CASE("cli gen emits a parseable instance") {
  const CliResult r =
      run({"gen", "--n", "5", "--m", "7", "--fmax", "3", "--seed", "11"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const fbg::Instance inst = fbg::parse_instance(in);
  CHECK(inst.graph.vertex_count() == 5);
  CHECK(inst.graph.edge_count() == 7);

  // Same flags, same bytes.
  const CliResult again =
      run({"gen", "--n", "5", "--m", "7", "--fmax", "3", "--seed", "11"});
  CHECK(again.out == r.out);

  CHECK(run({"gen", "--n", "0"}).code == 3);  // impossible parameters
}

TEST_CASE("cli solve") {
  const std::string path = triangle_file();
  const CliResult text = run({"solve", "--input", path});
  CHECK(text.code == 0);
  CHECK(text.out.find("degree sum h = 2") != std::string::npos);

  const CliResult kv = run({"solve", "--input", path, "--format", "kv"});
  CHECK(kv.code == 0);
  CHECK(kv.out.find("h = 2\n") != std::string::npos);
  CHECK(kv.out.find("edges = 1\n") != std::string::npos);

  // Generator-backed instance when no --input is given.
  const CliResult generated =
      run({"solve", "--n", "4", "--m", "5", "--fmax", "2", "--seed", "3"});
  CHECK(generated.code == 0);
  CHECK(generated.out.find("degree sum h") != std::string::npos);
}

TEST_CASE("cli certify") {
  const std::string star = write_temp(
      "fbg_cli_star.fbg",
      fbg::serialize_instance({fbgtest::star3(), fbgtest::ones(4)}));

  const CliResult text = run({"certify", "--input", star});
  CHECK(text.code == 0);
  CHECK(text.out.find("gamma = 2") != std::string::npos);
  CHECK(text.out.find("S = {0}") != std::string::npos);

  const CliResult kv = run({"certify", "--input", star, "--format", "kv"});
  CHECK(kv.code == 0);
  CHECK(kv.out.find("gamma = 2\n") != std::string::npos);
  CHECK(kv.out.find("S = 0\n") != std::string::npos);
}

TEST_CASE("cli verify") {
  const std::string path = triangle_file();
  const CliResult text = run({"verify", "--input", path});
  CHECK(text.code == 0);
  CHECK(text.out.find("result: PASS") != std::string::npos);

  const CliResult kv = run({"verify", "--input", path, "--format", "kv"});
  CHECK(kv.code == 0);
  CHECK(kv.out.find("result = pass\n") != std::string::npos);
}

TEST_CASE("cli error exit codes") {
  const std::string bad = write_temp("fbg_cli_bad.fbg", "p fbg 2 0\nw 1 1\n");
  const CliResult parse = run({"solve", "--input", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("parse error: line 2") != std::string::npos);

  const CliResult missing = run({"solve", "--input", "/no/such/file.fbg"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open file") != std::string::npos);

  std::string big = "p fbg 12 0\n";
  for (int v = 0; v < 12; ++v) big += "w " + std::to_string(v) + " 1\n";
  const std::string large = write_temp("fbg_cli_large.fbg", big);
  const CliResult guard = run({"certify", "--input", large, "--limit", "10"});
  CHECK(guard.code == 3);
  CHECK(guard.err.find("guard violation") != std::string::npos);

  // The default ceiling admits n = 12; an out-of-range ceiling is rejected.
  const CliResult ok = run({"certify", "--input", large, "--format", "kv"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("gamma = 12\n") != std::string::npos);
  CHECK(run({"certify", "--input", large, "--limit", "21"}).code == 3);
}

TEST_CASE("cli selftest") {
  const CliResult r = run({"selftest", "--count", "25", "--seed", "7", "--n",
                           "5", "--m", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("instance battery") != std::string::npos);

  // Same flags, same report.
  const CliResult again = run({"selftest", "--count", "25", "--seed", "7",
                               "--n", "5", "--m", "8"});
  CHECK(again.out == r.out);

  // Zero instances pass vacuously.
  const CliResult zero = run({"selftest", "--count", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("result: PASS") != std::string::npos);

  CHECK(run({"selftest", "--count", "-1"}).code == 3);
}
