#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cli_runner.hpp"

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / ("ulamlab_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("ulam gen") {
  const auto r = cli::run("ulam gen --limit 6");
  CHECK(r.status == 0);
  CHECK(r.out == "1 2 3 4 6\n");
  CHECK(cli::run("ulam gen --limit 100 --algo naive").out == cli::run("ulam gen --limit 100").out);
  CHECK(cli::run("ulam gen --limit 6 --format csv").out == "index,term\n1,1\n2,2\n3,3\n4,4\n5,6\n");
}

TEST_CASE("chain decompose") {
  const auto file = temp_file("doubling.txt", "# doubling chain\n1 2 4 8\n");
  const auto r = cli::run("chain decompose --terms " + file);
  CHECK(r.status == 0);
  CHECK(r.out.find("regulator_sum=7 target-1=7 OK") != std::string::npos);
}

TEST_CASE("chain shortest") {
  const auto r = cli::run("chain shortest --n 15");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("iota=5 lower=3.78 witness=1,2,3,5,10,15", 0) == 0);
  const auto partial = cli::run("chain shortest --n 191 --budget 10");
  CHECK(partial.status == 0);
  CHECK(partial.out.find("status=budget-exhausted") != std::string::npos);
  const auto table = cli::run("chain shortest --up-to 16 --format csv");
  CHECK(table.status == 0);
  CHECK(table.out.find("\n15,4,5,1,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli::run("").status == 2);
  CHECK(cli::run("ulam gen").status == 2);
  CHECK(cli::run("ulam gen --limit 10 --format xml").status == 2);
  CHECK(cli::run("ulam gen --limit 10 --format svg").status == 2); // svg needs --output
  CHECK(cli::run("ulam verify --limit 2000").status == 0);
  CHECK(cli::run("chain decompose --terms /nonexistent/file").status == 2);
  CHECK(cli::run("report majorant --counts 1").status == 2);
  CHECK(cli::run("--help").status == 0);

  const auto fake = temp_file("fake_ulam.txt", "1 2 3 4 6 8 11 13 16 18 26 28 36 38 48\n");
  const auto v = cli::run("ulam verify --terms " + fake + " --limit 48");
  CHECK(v.status == 1);
  CHECK(v.out.find("verdict: FAIL") != std::string::npos);

  const auto bad = temp_file("bad_chain.txt", "1 2 5\n");
  const auto bv = cli::run("chain validate --terms " + bad);
  CHECK(bv.status == 1);
  CHECK(bv.out.find("violation index=3 kind=not-a-sum") != std::string::npos);
  CHECK(cli::run("chain decompose --terms " + bad).status == 2);
}

TEST_CASE("chain validate star vs general") {
  const auto file = temp_file("general_only.txt", "1 2 4 5 8\n");
  CHECK(cli::run("chain validate --terms " + file + " --mode general").status == 0);
  CHECK(cli::run("chain validate --terms " + file + " --mode star").status == 1);
}

TEST_CASE("embed and density plot") {
  const auto e = cli::run("chain embed --ulam-count 15");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("chain=1,2,3,4,6,8,11,13,16,18,26,28,36,38,46,47\n", 0) == 0);

  const auto plot = (std::filesystem::temp_directory_path() / "ulamlab_test_density.svg").string();
  std::filesystem::remove(plot);
  const auto d = cli::run("ulam density --limit 1000 --checkpoints 1,10,100,1000 --plot " + plot);
  CHECK(d.status == 0);
  CHECK(d.out.find("verdict=") != std::string::npos);
  const auto svg = slurp(plot);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
}
