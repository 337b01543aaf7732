#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "emit.hpp"
#include "levels.hpp"

using namespace permstat;
using namespace permstat::cli;

TEST_CASE("level files parse") {
  LevelSpec spec = parse_level_text(
      "# header comment\n"
      "\n"
      "energy=0 degeneracy=2\n"
      "energy=1/2 degeneracy=1   # inline comment\n"
      "energy=-3/4 degeneracy=3\n");
  REQUIRE(spec.levels.size() == 3);
  CHECK(spec.levels[0].energy == ExactRational(0));
  CHECK(spec.levels[0].degeneracy == 2);
  CHECK(spec.levels[1].energy == ExactRational("1/2"));
  CHECK(spec.levels[2].energy == ExactRational("-3/4"));
  CHECK(spec.levels[2].degeneracy == 3);
}

TEST_CASE("level file errors name the line") {
  auto message_of = [](const std::string& text) {
    try {
      parse_level_text(text);
      return std::string("no error");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("energy=0 degeneracy=1\nenergy=zz degeneracy=1").find("line 2") !=
        std::string::npos);
  CHECK(message_of("degeneracy=1 energy=0").find("line 1") != std::string::npos);
  CHECK(message_of("energy=0 degeneracy=0").find("degeneracy") != std::string::npos);
  CHECK(message_of("energy=0 degeneracy=1 extra=9").find("trailing") != std::string::npos);
  CHECK(message_of("# only a comment\n").find("no levels") != std::string::npos);
  CHECK_THROWS_AS(load_level_file("/nonexistent/levels.txt"), std::invalid_argument);
}

TEST_CASE("real formatting carries 12 significant digits") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(1.5040773967762742) == "1.50407739678");
  CHECK(format_real(2.0 * 10000.0 * 0.6931471805599453) == "13862.9436112");
}

TEST_CASE("rational decimal rendering") {
  CHECK(rational_decimal(ExactRational("9/2")) == "4.5");
  CHECK(rational_decimal(ExactRational(0)) == "0");
  CHECK(rational_decimal(ExactRational("-9/2")) == "-4.5");
  // far outside double range
  ExactRational huge(pow(ExactInt(10), 600), ExactInt(3));
  std::string rendered = rational_decimal(huge);
  CHECK(rendered.find("e+599") != std::string::npos);
  CHECK(rendered.substr(0, 4) == "3.33");
  std::string negative = rational_decimal(-huge);
  CHECK(negative[0] == '-');
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("table") == Format::Table);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("json records keep exact strings and insertion order") {
  Record record;
  record.command = "count";
  record.param("cells", 3ul);
  record.param("statistics", "bose-einstein");
  record.formula = "W = (N+C-1)!/(N!(C-1)!)";
  record.result("count", integer_value(ExactInt(6)));
  record.result("volume", rational_value(ExactRational("9/2")));
  record.result("entropy", real_value(1.5040773967762742));

  std::ostringstream out;
  emit(out, record, Format::Json);
  auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["command"] == "count");
  CHECK(doc["params"]["cells"] == "3");
  CHECK(doc["results"]["count"] == "6");
  CHECK(doc["results"]["volume"] == "9/2");
  CHECK(doc["results"]["entropy"] == "1.50407739678");
  // identical record emits identical bytes
  std::ostringstream again;
  emit(again, record, Format::Json);
  CHECK(out.str() == again.str());
}

TEST_CASE("csv quotes values containing separators") {
  Record record;
  record.command = "enumerate";
  record.param("cells", 3ul);
  record.columns = {"occupation", "weight"};
  record.rows.push_back({text_value("[2,0,0]"), rational_value(ExactRational("1/2"))});

  std::ostringstream out;
  emit(out, record, Format::Csv);
  std::string text = out.str();
  CHECK(text.find("\"[2,0,0]\"") != std::string::npos);
  CHECK(text.find("1/2") != std::string::npos);
  CHECK(text.find("# command=enumerate cells=3") != std::string::npos);
}
