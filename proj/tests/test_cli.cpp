#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "csl/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = csl::cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cslindex_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("index --reflect") {
  const Result r = run({"index", "--reflect", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "sigma=3 method=reflection\n");
  CHECK(run({"index", "--reflect", "1,1,1,1", "--details"}).out == "sigma=2 method=reflection factors=4\n");
}

TEST_CASE("index --matrix") {
  const std::string file = write_temp("rot.txt", "2 2\n3/5 -4/5\n4/5 3/5\n");
  CHECK(run({"index", "--matrix", file, "--method", "fortes"}).out == "sigma=5 method=fortes\n");
  CHECK(run({"index", "--matrix", file, "--method", "closed", "--details"}).out ==
        "sigma=5 method=closed_form factors=5,1,1 invariant_factors=1,25\n");
  const Result all = run({"index", "--matrix", file});
  CHECK(all.out ==
        "sigma=5 method=fortes\nsigma=5 method=closed_form\nsigma=5 method=oracle_hnf\nsigma=5 method=oracle_count\n");
  CHECK(run({"index", "--matrix", file, "--method", "count", "--cap", "10"}).code == csl::cli::kExitInputError);
}

TEST_CASE("verify") {
  const std::string id3 = write_temp("id3.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
  const Result r = run({"verify", "--matrix", id3});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "sigma=1 method=fortes\nsigma=1 method=closed_form\nsigma=1 method=oracle_hnf\nsigma=1 method=oracle_count\n"
        "q=1 verdict=agree\n");

  const std::string skewed = write_temp("skew.txt", "2 2\n1 1\n0 1\n");
  const Result bad = run({"verify", "--matrix", skewed});
  CHECK(bad.code == csl::cli::kExitInputError);
  CHECK(bad.err.find("not orthogonal") != std::string::npos);

  const std::string big = write_temp("big.txt", "2 2\n3/5 -4/5\n4/5 3/5\n");
  const Result capped = run({"verify", "--matrix", big, "--cap", "10"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("method=oracle_count skipped=cap") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"verify", "--matrix", "/nonexistent/file"}).code == 2);
  CHECK(run({"index", "--matrix", write_temp("bad.txt", "2 2\n1 2\n")}).code == 2);
  CHECK(run({"index", "--reflect", "0,0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"spectrum", "--dim", "0", "--max", "5"}).code == 2);
  CHECK(run({"decompose", "--odd", "8"}).code == 2);
}

TEST_CASE("reflect and compose round trip") {
  const Result r = run({"reflect", "--vector", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "# q=3\n3 3\n1/3 -2/3 -2/3\n-2/3 1/3 -2/3\n-2/3 -2/3 1/3\n");
  const std::string a = write_temp("r111.txt", r.out);
  const std::string b = write_temp("r120.txt", run({"reflect", "--vector", "1,2,0"}).out);
  const Result square = run({"compose", a, a});
  CHECK(square.out == "# q=1\n3 3\n1 0 0\n0 1 0\n0 0 1\n");
  const Result product = run({"compose", a, b});
  CHECK(product.out.rfind("# q=15\n", 0) == 0);
  const std::string p = write_temp("p.txt", product.out);
  CHECK(run({"index", "--matrix", p, "--method", "fortes"}).out == "sigma=15 method=fortes\n");
}

TEST_CASE("snf") {
  const std::string file = write_temp("snf.txt", "3 3\n1 -2 -2\n-2 1 -2\n-2 -2 1\n");
  const Result r = run({"snf", "--matrix", file});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# d\n1 3\n1 3 9\n# P\n3 3\n", 0) == 0);
  const auto json = nlohmann::json::parse(run({"snf", "--matrix", file, "--format", "json"}).out);
  CHECK(json["d"] == nlohmann::json::array({"1", "3", "9"}));
  CHECK(json["p"].size() == 3);
}

TEST_CASE("spectrum and decompose") {
  const Result s = run({"spectrum", "--dim", "3", "--max", "9"});
  CHECK(s.out ==
        "sigma=1 axis=(1,0,0) norm=1\nsigma=3 axis=(1,1,1) norm=3\nsigma=5 axis=(2,1,0) norm=5\n"
        "sigma=7 axis=(3,2,1) norm=14\nsigma=9 axis=(2,2,1) norm=9\n");
  CHECK(run({"decompose", "--odd", "7"}).out == "target=7 squares=1,1,1,2 content=1\n");
  CHECK(run({"decompose", "--three", "7"}).out == "target=7 representable=no\n");
  const Result big = run({"decompose", "--odd", "4711"});
  CHECK(big.code == 0);
  CHECK(big.out.find("content=1") != std::string::npos);
}

TEST_CASE("corpus is deterministic and mirrors into json") {
  const Result a = run({"corpus", "--dim", "4", "--count", "200", "--seed", "7"});
  const Result b = run({"corpus", "--dim", "4", "--count", "200", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(line.rfind("q=", 0) == 0);
    CHECK(line.find(" sigma=") != std::string::npos);
    CHECK(line.size() >= 10);
    CHECK(line.substr(line.size() - 10) == " agree=yes");
  }
  CHECK(count == 200);

  const Result json = run({"--format", "json", "corpus", "--dim", "4", "--count", "200", "--seed", "7"});
  const auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.size() == 200);
  std::istringstream again(a.out);
  for (const auto& obj : doc) {
    std::getline(again, line);
    CHECK(line == "q=" + obj["q"].get<std::string>() + " sigma=" + obj["sigma"].get<std::string>() +
                      " agree=" + obj["agree"].get<std::string>());
  }
}

TEST_CASE("cap override from the environment") {
  ::setenv(csl::cli::kCapEnvVar, "12", 1);
  CHECK(csl::cli::default_cap() == 12);
  const std::string file = write_temp("rot2.txt", "2 2\n3/5 -4/5\n4/5 3/5\n");
  CHECK(run({"verify", "--matrix", file}).out.find("skipped=cap") != std::string::npos);
  ::setenv(csl::cli::kCapEnvVar, "junk", 1);
  CHECK(csl::cli::default_cap() == 10'000'000ULL);
  ::unsetenv(csl::cli::kCapEnvVar);
}
