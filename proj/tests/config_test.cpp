#include <doctest.h>

#include "axial/config.hpp"

using namespace axial;

TEST_CASE("config: sections, scalars, lists, comments") {
  Config c = Config::parse_string(
      "# top comment\n"
      "[group]\n"
      "family = free   # trailing comment\n"
      "rank = 2\n"
      "\n"
      "[action]\n"
      "g = \"a b # not a comment\"\n"
      "\n"
      "[suites]\n"
      "run = [\"axiom1\", \"axiom2\"]\n"
      "ks = [1, 3]\n"
      "deep = true\n"
      "slope = 0.5\n");

  CHECK(c.has("group.family"));
  CHECK(c.str("group.family") == "free");
  CHECK(c.integer("group.rank", 0) == 2);
  CHECK(c.str("action.g") == "a b # not a comment");
  CHECK(c.list("suites.run") == std::vector<std::string>{"axiom1", "axiom2"});
  CHECK(c.list("suites.ks") == std::vector<std::string>{"1", "3"});
  CHECK(c.boolean("suites.deep", false));
  CHECK(c.real("suites.slope", 0.0) == 0.5);

  CHECK_FALSE(c.has("group.missing"));
  CHECK(c.str("group.missing", "dflt") == "dflt");
  CHECK(c.integer("group.missing", 7) == 7);
}

TEST_CASE("config: malformed inputs throw") {
  CHECK_THROWS_AS(Config::parse_string("[s]\nno equals sign\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse_string("[bad\nk = 1\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse_string("[s]\nk = \"unterminated\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse_string("[s]\nk = 1\nk = 2\n"), ConfigError);
  CHECK_THROWS_AS(Config::parse_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("config: type mismatches throw") {
  Config c = Config::parse_string("[s]\nk = notanumber\n");
  CHECK_THROWS_AS(c.integer("s.k", 0), ConfigError);
  CHECK_THROWS_AS(c.real("s.k", 0.0), ConfigError);
  CHECK_THROWS_AS(c.boolean("s.k", false), ConfigError);
}
