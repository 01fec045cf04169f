#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "qvariety/fixtures.hpp"

using namespace qvariety;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parameter tables match the checked-in files", "[fixtures]") {
  for (const std::string& name : fixture_names()) {
    DYNAMIC_SECTION(name) {
      std::string golden = slurp(std::string(QVARIETY_SOURCE_DIR) +
                                 "/data/golden/" + name + ".csv");
      REQUIRE(fixture_csv(run_fixture(name)) == golden);
    }
  }
}

TEST_CASE("fixture registry", "[fixtures]") {
  REQUIRE(fixture_names().size() == 13);
  REQUIRE_THROWS_AS(run_fixture("nope"), std::invalid_argument);

  // deterministic output
  REQUIRE(fixture_csv(run_fixture("len98_f7")) == fixture_csv(run_fixture("len98_f7")));
}
