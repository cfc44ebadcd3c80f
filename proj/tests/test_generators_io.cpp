#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rootcluster/errors.hpp"
#include "rootcluster/generators_io.hpp"

using namespace rootcluster;

namespace {

GeneratorFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_generators(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const DomainError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parses header, comments and blank lines") {
  const auto file = parse("# S4\nn=4\n\n1,2,3,0   # 4-cycle\n 1, 0, 2, 3\n");
  CHECK(file.degree == 4);
  REQUIRE(file.generators.size() == 2);
  CHECK(file.generators[0].to_string() == "1,2,3,0");
  CHECK(file.generators[1].to_string() == "1,0,2,3");
}

TEST_CASE("degree defaults to the first permutation") {
  const auto file = parse("2,0,1\n");
  CHECK(file.degree == 3);
  CHECK(file.generators.size() == 1);
}

TEST_CASE("header with no generators") {
  const auto file = parse("n=5\n");
  CHECK(file.degree == 5);
  CHECK(file.generators.empty());
}

TEST_CASE("malformed input names the line") {
  CHECK(error_of("n=3\n0,1,2\n0,1\n").find("line 3") != std::string::npos);
  CHECK(error_of("0,0,1\n").find("line 1") != std::string::npos);
  CHECK(error_of("0,x,1\n").find("line 1") != std::string::npos);
  CHECK_FALSE(error_of("n=0\n").empty());
  CHECK_FALSE(error_of("").empty());
  CHECK_FALSE(error_of("# only a comment\n").empty());
  CHECK_FALSE(error_of("0,1,,2\n").empty());
}

TEST_CASE("format and parse round trip") {
  const auto file = parse("n=4\n1,2,3,0\n1,0,2,3\n");
  const auto text = format_generators(file);
  const auto again = parse(text);
  CHECK(again.degree == file.degree);
  CHECK(again.generators == file.generators);
  CHECK(format_generators(again) == text);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_generator_file("/nonexistent/generators.txt"), DomainError);
}
