#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "axb/config.hpp"
#include "axb/corpus.hpp"
#include "axb/describe.hpp"
#include "axb/errors.hpp"
#include "axb/json_writer.hpp"
#include "axb/suites.hpp"

using namespace axb;

TEST_SUITE("report_cli") {
  TEST_CASE("config parsing and round trip") {
    std::istringstream in("# comment\ngrid.n = 256  # trailing\nseed=42\ntol_scale = 2.5\ncorpus = log_gaussian:u0=1\n");
    const RunConfig c = parse_config(in);
    CHECK(c.grid_n == 256);
    CHECK(c.seed == 42ULL);
    CHECK(c.tol_scale == 2.5);
    REQUIRE(c.corpus.size() == 1);
    std::istringstream again(to_text(c));
    CHECK(to_text(parse_config(again)) == to_text(c));
  }

  TEST_CASE("config errors name the key") {
    std::istringstream bad("grid.n = 256\nfoo.bar = 1\n");
    try {
      parse_config(bad);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "foo.bar");
    }
    RunConfig c = default_config();
    CHECK_THROWS_AS(apply_setting(c, "grid.n", "many"), ConfigError);
    c.tol_scale = -1.0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "corpus", "no_such_family"), ConfigError);
  }

  TEST_CASE("corpus registry") {
    const auto fam = corpus_families();
    CHECK(std::find(fam.begin(), fam.end(), "log_gaussian") != fam.end());
    const auto e = parse_corpus_entry("power_exp:alpha=2");
    CHECK(e.param("alpha") == 2.0);
    CHECK(e.param("beta") == 1.0);
    CHECK(parse_corpus_entry(e.id()).id() == e.id());
    CHECK_THROWS_AS(parse_corpus_entry("nothing:a=1"), UnknownName);
  }

  TEST_CASE("describe") {
    CHECK(describe("hardy_steklov").find("topic: Hardy-Steklov averages") != std::string::npos);
    CHECK_THROWS_AS(describe("no_such_operation"), UnknownName);
    for (const auto& name : operation_names()) CHECK_FALSE(describe(name).empty());
  }

  TEST_CASE("float formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(NAN) == "null");
    CHECK(format_double(INFINITY) == "null");
    Json j = {{"b", 1.5}, {"a", NAN}};
    CHECK(dump_json(j, 0).find("\"b\"") < dump_json(j, 0).find("\"a\""));
    CHECK(dump_json(j, 0).find("null") != std::string::npos);
    CHECK(profile_csv({{0.5, 2.0}}).rfind("s,value\n", 0) == 0);
  }

  TEST_CASE("suite resolution") {
    CHECK(resolve_suite("all").size() == 14);
    CHECK(resolve_suite("partition") == std::vector<std::string>{"AC2"});
    CHECK(resolve_suite("AC7") == std::vector<std::string>{"AC7"});
    CHECK_THROWS_AS(resolve_suite("nope"), UnknownName);
  }

  TEST_CASE("partition suite passes and is deterministic") {
    const auto a = run_suite(default_config(), "partition");
    CHECK(a.passed);
    CHECK(a.results.at(0).metrics["max_defect"].get<double>() < 1e-12);
    const auto b = run_suite(default_config(), "partition");
    CHECK(dump_json(a.json) == dump_json(b.json));
  }

  TEST_CASE("an empty corpus is an error") {
    RunConfig c = default_config();
    c.corpus.clear();
    try {
      run_suite(c, "besov");
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()) == "empty corpus");
    }
  }
}
