#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rootcluster/cli.hpp"
#include "rootcluster/report.hpp"
#include "rootcluster/verify.hpp"

namespace cli = rootcluster::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootcluster");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path tmp_dir() {
  const char* dir = std::getenv("ROOTCLUSTER_TEST_TMP");
  return dir ? std::filesystem::path(dir) : std::filesystem::temp_directory_path();
}

}  // namespace

TEST_CASE("model info") {
  const auto doc = run_json({"--affine", "9", "model", "info"});
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "model info");
  CHECK(doc["model"]["order"] == 54);
  CHECK(run({"--affine", "9", "model", "info"}).code == 0);
}

TEST_CASE("clusters") {
  const auto doc = run_json({"--affine", "9", "clusters"});
  CHECK(doc["cluster_size"] == 1);
  CHECK(doc["cluster_count"] == 9);
  const auto cyc = run_json({"--cyclic", "4", "clusters"});
  CHECK(cyc["cluster_size"] == 4);
  CHECK(cyc["cluster_count"] == 1);
}

TEST_CASE("minimal sets") {
  const auto doc = run_json({"--affine", "5", "mgs", "enumerate"});
  CHECK(doc["count"] == 10);
  const auto minimum = run_json({"--affine", "15", "mgs", "enumerate", "--minimum"});
  CHECK(minimum["count"] == 60);

  const auto check = run_json({"--affine", "105", "mgs", "check", "--roots", "0,1,2"});
  CHECK(check["generates"] == true);
  CHECK(check["minimal"] == false);
  CHECK(check["removable_root"] == 2);

  const auto reduced = run_json({"--affine", "9", "mgs", "reduce", "--roots", "0,1,2,3,4,5,6,7,8"});
  CHECK(reduced["result"] == json({0, 1}));
}

TEST_CASE("towers") {
  const auto t = run_json({"--affine", "105", "towers", "build", "--order", "35,21,15"});
  CHECK(t["degree_sequence"] == json({105, 840, 5040}));
  CHECK(t["root_capacities"] == json({0, 1, 15, 105}));
  CHECK(t["terminates_at_splitting_field"] == true);

  CHECK(run_json({"--symmetric", "4", "towers", "enumerate", "--count-only"})["count"] == 12);
  const auto least = run_json({"--affine", "9", "towers", "minlen"});
  CHECK(least["least_length"] == 3);
  CHECK(least["count"] == 9);
}

TEST_CASE("verify") {
  const auto r = run({"--format", "json", "verify", "degree-sequence", "--primes", "3,5,7"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["reports"][0]["status"] == "pass");

  CHECK(run({"verify", "unique-tower", "--cyclic", "3"}).code == 0);
  CHECK(run({"verify", "affine-model", "--n", "8"}).code == 65);
  CHECK(run({"verify", "all", "--n", "9"}).code == 64);
  CHECK(run({"--subset-budget", "5", "verify", "minimum-minimal-count", "--n", "15"}).code == 2);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"clusters"}).code == 64);
  CHECK(run({"--affine", "9", "--symmetric", "3", "clusters"}).code == 64);
  CHECK(run({"--affine", "9", "--format", "xml", "clusters"}).code == 64);
  CHECK(run({"--affine", "9", "bogus"}).code == 64);
  CHECK(run({"--affine", "9", "mgs", "check"}).code == 64);
  const auto even = run({"--affine", "8", "clusters"});
  CHECK(even.code == 65);
  CHECK(even.err.find("odd") != std::string::npos);
  CHECK(run({"--affine", "9", "mgs", "check", "--roots", "0,9"}).code == 65);
  CHECK(run({"--cyclic", "4", "towers", "build", "--order", "0,1"}).code == 65);
  CHECK(run({"--generators", "/nonexistent/g.txt", "clusters"}).code == 65);
  CHECK(run({"--closure-budget", "10", "--symmetric", "5", "clusters"}).code == 2);
  CHECK(run({"--tower-budget", "2", "--affine", "9", "towers", "enumerate"}).code == 2);
  CHECK(run({"--subset-budget", "0", "--affine", "9", "clusters"}).code != 0);
}

TEST_CASE("generator files") {
  const auto path = tmp_dir() / "d4_generators.txt";
  {
    std::ofstream f(path);
    f << "# symmetries of a square\nn=4\n1,2,3,0\n0,3,2,1\n";
  }
  const auto doc = run_json({"--generators", path.string(), "--name", "d4", "clusters"});
  CHECK(doc["cluster_size"] == 2);
  CHECK(doc["cluster_count"] == 2);
  const auto towers = run_json({"--generators", path.string(), "towers", "enumerate"});
  CHECK(towers["count"] >= 2);
  std::filesystem::remove(path);
}

TEST_CASE("output file and format stability") {
  const auto path = tmp_dir() / "towers.json";
  const auto r = run({"--format", "json", "-o", path.string(), "--affine", "9", "towers", "enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  const auto parsed = json::parse(text.str());
  CHECK(parsed["count"] == 18);
  CHECK(parsed.dump(2) + "\n" == text.str());
  std::filesystem::remove(path);

  // same command, same bytes
  CHECK(run({"--format", "json", "--affine", "15", "towers", "minlen"}).out ==
        run({"--format", "json", "--affine", "15", "towers", "minlen"}).out);

  const auto csv = run({"--format", "csv", "--affine", "5", "mgs", "enumerate"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);
  CHECK(run({"--affine", "5", "mgs", "enumerate"}).code == 0);
}

TEST_CASE("theorem json round trip") {
  namespace report = rootcluster::report;
  rootcluster::VerifyParams params;
  params.primes = {3, 5, 7};
  const auto r = rootcluster::verify_theorem("root-capacity", params);
  report::Document doc{"verify", {{"reports", {report::theorem_json(r)}}}, "reports"};
  const auto text = report::render(doc, report::Format::json);
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["command"] == "verify");
  CHECK(parsed.dump(2) + "\n" == text);
}
